#pragma once

#include <string>

#include "circnet/network.hpp"

namespace circnet::testing {

inline Network load_fixture(const std::string& name) {
  return load_network(std::string(CIRCNET_DATA_DIR) + "/" + name);
}

/// One interior 4-valent vertex with alternating edge directions: sources
/// b1, b3 and sinks b2, b4 in clockwise order. The smallest network with a
/// blowup vertex.
inline Network star4() {
  Network n;
  n.name = "star4";
  n.planar = true;
  n.boundary = {{"b1", Role::Source},
                {"b2", Role::Sink},
                {"b3", Role::Source},
                {"b4", Role::Sink}};
  n.interior = {"v"};
  n.edges = {{"x1", "b1", "v", WeightExpr::variable("x1")},
             {"x2", "v", "b2", WeightExpr::variable("x2")},
             {"x3", "b3", "v", WeightExpr::variable("x3")},
             {"x4", "v", "b4", WeightExpr::variable("x4")}};
  n.rotation["v"] = {{"x1", EdgeEnd::Head},
                     {"x2", EdgeEnd::Tail},
                     {"x3", EdgeEnd::Head},
                     {"x4", EdgeEnd::Tail}};
  return n;
}

/// Two sources funneled through a shared interior edge g, then fanned out to
/// two sinks; the smallest stage for tail-swapping walk pairs.
inline Network funnel() {
  Network n;
  n.name = "funnel";
  n.planar = true;
  n.boundary = {{"b1", Role::Source},
                {"b2", Role::Source},
                {"b3", Role::Sink},
                {"b4", Role::Sink}};
  n.interior = {"m1", "m2"};
  n.edges = {{"s1", "b1", "m1", WeightExpr::variable("s1")},
             {"s2", "b2", "m1", WeightExpr::variable("s2")},
             {"g", "m1", "m2", WeightExpr::variable("g")},
             {"t3", "m2", "b3", WeightExpr::variable("t3")},
             {"t4", "m2", "b4", WeightExpr::variable("t4")}};
  n.rotation["m1"] = {{"s1", EdgeEnd::Head},
                      {"s2", EdgeEnd::Head},
                      {"g", EdgeEnd::Tail}};
  n.rotation["m2"] = {{"g", EdgeEnd::Head},
                      {"t3", EdgeEnd::Tail},
                      {"t4", EdgeEnd::Tail}};
  return n;
}

}  // namespace circnet::testing
