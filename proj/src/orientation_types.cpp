#include "rigidpack/orientation_types.hpp"

#include "rigidpack/error.hpp"

namespace rigidpack {

Orientation::Orientation(MultiGraph host)
    : host_(std::move(host)), forward_(host_.m(), true) {}

Orientation::Orientation(MultiGraph host, std::vector<bool> forward)
    : host_(std::move(host)), forward_(std::move(forward)) {
  if (static_cast<int>(forward_.size()) != host_.m()) {
    throw InvalidArgument("orientation needs one direction per edge");
  }
}

VertexId Orientation::tail(EdgeId e) const {
  return forward_[e] ? host_.edge(e).u : host_.edge(e).v;
}

VertexId Orientation::head(EdgeId e) const {
  return forward_[e] ? host_.edge(e).v : host_.edge(e).u;
}

void Orientation::set_tail(EdgeId e, VertexId tail) {
  const Edge& edge = host_.edge(e);
  if (tail != edge.u && tail != edge.v) {
    throw InvalidArgument("vertex " + std::to_string(tail) + " is not an end of edge " +
                          std::to_string(e));
  }
  forward_[e] = tail == edge.u;
}

Count Orientation::in_degree(VertexId v) const {
  Count d = 0;
  for (EdgeId e : host_.incident(v)) d += head(e) == v ? 1 : 0;
  return d;
}

Count Orientation::out_degree(VertexId v) const { return host_.degree(v) - in_degree(v); }

Count Orientation::in_degree(VertexSet a) const {
  Count d = 0;
  for (EdgeId e = 0; e < host_.m(); ++e) d += (a.contains(head(e)) && !a.contains(tail(e))) ? 1 : 0;
  return d;
}

Count Orientation::out_degree(VertexSet a) const {
  Count d = 0;
  for (EdgeId e = 0; e < host_.m(); ++e) d += (a.contains(tail(e)) && !a.contains(head(e))) ? 1 : 0;
  return d;
}

}  // namespace rigidpack
