#pragma once

#include "hamel/lab/random.hpp"
#include "hamel/tower.hpp"

namespace hamel::test {

/// The three-generator Hamel tower used throughout the tests:
/// h1 above 0, h2 above h1, t of value h1 above h2.
struct M1 {
  Model model = Model::hamel();
  Vector h1, h2, t;

  M1() {
    Adjoined a = adjoin_value(model, Cut::below_weak(0, model.zero()), "h1");
    Adjoined b = adjoin_value(a.model, Cut::below_weak(0, a.element()), "h2");
    Adjoined c = adjoin_ball(b.model, AlphaCut{a.element(), b.model.zero(), true},
                             Cut::below_weak(0, b.element()), "t");
    model = c.model;
    h1 = model.gen(0);
    h2 = model.gen(1);
    t = model.gen(2);
  }
};

using lab::random_cut;
using lab::random_hamel;
using lab::random_plain;
using lab::random_vector;
using lab::Rng;

}  // namespace hamel::test
