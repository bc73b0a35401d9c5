#pragma once

#include "mag/graph.hpp"

// Small named graphs shared by the unit and acceptance tests.
namespace mag::fixtures {

// X->Z->Y
inline MixedGraph chain() {
  return {{"X", "Y", "Z"}, {Edge::directed(0, 2), Edge::directed(2, 1)}};
}

// X->Z<-Y
inline MixedGraph coll() {
  return {{"X", "Y", "Z"}, {Edge::directed(0, 2), Edge::directed(1, 2)}};
}

// X<->Z<->Y
inline MixedGraph bicoll() {
  return {{"X", "Y", "Z"}, {Edge::bidirected(0, 2), Edge::bidirected(2, 1)}};
}

// Z->X, Z->Y, X->Y
inline MixedGraph cov() {
  return {{"X", "Y", "Z"}, {Edge::directed(2, 0), Edge::directed(2, 1), Edge::directed(0, 1)}};
}

// X->Y
inline MixedGraph two() { return {{"X", "Y"}, {Edge::directed(0, 1)}}; }

// X<->Y
inline MixedGraph two_bi() { return {{"X", "Y"}, {Edge::bidirected(0, 1)}}; }

// Ancestral, not maximal: α and δ are joined by the inducing path α<->β<->γ<->δ.
inline MixedGraph nonmax() {
  return {{"α", "β", "γ", "δ"},
          {Edge::bidirected(0, 1), Edge::bidirected(1, 2), Edge::bidirected(2, 3),
           Edge::directed(1, 3), Edge::directed(2, 0)}};
}

// W->Z, Z<->X, Z->Y, X->Y: (W, Z, X, Y) discriminates X.
inline MixedGraph disc() {
  return {{"W", "X", "Y", "Z"},
          {Edge::directed(0, 3), Edge::bidirected(3, 1), Edge::directed(3, 2),
           Edge::directed(1, 2)}};
}

// Z->X, X->Y
inline MixedGraph nonblk() {
  return {{"X", "Y", "Z"}, {Edge::directed(2, 0), Edge::directed(0, 1)}};
}

}  // namespace mag::fixtures
