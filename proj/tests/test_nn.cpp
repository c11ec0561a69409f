#include <doctest.h>

#include <cmath>
#include <complex>

#include "nqr/nn/adam.hpp"
#include "nqr/nn/arch.hpp"
#include "nqr/nn/gradcheck.hpp"
#include "nqr/nn/losses.hpp"
#include "nqr/nn/modules.hpp"
#include "nqr/rng.hpp"

using namespace nqr::nn;
using C = CScalar;

namespace {

template <class S>
Tensor<S> vec_tensor(std::initializer_list<S> vals) {
  Tensor<S> t = Tensor<S>::zeros(static_cast<Eigen::Index>(vals.size()), 1, 1);
  Eigen::Index i = 0;
  for (const S& v : vals) t.v(i++, 0) = v;
  return t;
}

}  // namespace

TEST_SUITE_BEGIN("nn");

TEST_CASE("linear forward: identity, complex product, loop oracle") {
  auto rng = nqr::rng::stream(1, nqr::rng::kInit);

  Linear<C> ident(3, 3, rng);
  ident.weight().value.setIdentity();
  ident.bias().value.setZero();
  auto x = vec_tensor<C>({{1, 2}, {3, -1}, {0, 0.5}});
  auto y = ident.forward(x);
  CHECK((y.v - x.v).norm() < 1e-15);

  Linear<C> rot(1, 1, rng);
  rot.weight().value(0, 0) = {0, 1};
  rot.bias().value.setZero();
  auto z = rot.forward(vec_tensor<C>({{1, 0}}));
  CHECK(std::abs(z.v(0, 0) - C(0, 1)) < 1e-15);

  Linear<C> lin(4, 3, rng);
  Tensor<C> xb = Tensor<C>::zeros(4, 2, 1);
  std::normal_distribution<double> g;
  for (Eigen::Index i = 0; i < xb.v.size(); ++i) xb.v(i) = {g(rng), g(rng)};
  auto yb = lin.forward(xb);
  for (Eigen::Index col = 0; col < 2; ++col)
    for (Eigen::Index r = 0; r < 3; ++r) {
      C acc = lin.bias().value(r, 0);
      for (Eigen::Index c = 0; c < 4; ++c)
        acc += lin.weight().value(r, c) * xb.v(c, col);
      CHECK(std::abs(yb.v(r, col) - acc) < 1e-12);
    }
}

TEST_CASE("conv1d forward: identities and loop oracle") {
  auto rng = nqr::rng::stream(2, nqr::rng::kInit);
  std::normal_distribution<double> g;

  ConvGeometry unit{1, 1, 1, 1, 1, 0, false};
  Tensor<C> x = Tensor<C>::zeros(1, 1, 8);
  for (Eigen::Index i = 0; i < 8; ++i) x.v(0, i) = {g(rng), g(rng)};
  // kernel [1], no bias -> identity
  {
    Conv1d<C> c(unit, rng);
    std::vector<Param<C>*> ps;
    c.collect_params(ps);
    ps[0]->value(0, 0) = 1.0;
    ps[1]->value.setZero();
    auto y = c.forward(x);
    CHECK((y.v - x.v).norm() < 1e-15);
  }
  // kernel [0,1,0] with pad 1 -> identity
  {
    ConvGeometry k3{1, 1, 3, 1, 1, 1, false};
    Conv1d<C> c(k3, rng);
    std::vector<Param<C>*> ps;
    c.collect_params(ps);
    ps[0]->value.setZero();
    ps[0]->value(0, 1) = 1.0;
    ps[1]->value.setZero();
    auto y = c.forward(x);
    CHECK(y.time == 8);
    CHECK((y.v - x.v).norm() < 1e-15);
  }
  // random geometry against a direct O(n k) loop
  {
    ConvGeometry rg{3, 2, 3, 2, 2, 2, false};
    Conv1d<C> c(rg, rng);
    std::vector<Param<C>*> ps;
    c.collect_params(ps);
    Tensor<C> xi = Tensor<C>::zeros(3, 2, 9);
    for (Eigen::Index i = 0; i < xi.v.size(); ++i) xi.v(i) = {g(rng), g(rng)};
    auto y = c.forward(xi);
    const Eigen::Index t_out = (9 + 2 * rg.pad - rg.dilation * 2 - 1) / rg.stride + 1;
    REQUIRE(y.time == t_out);
    for (Eigen::Index b = 0; b < 2; ++b)
      for (Eigen::Index o = 0; o < 2; ++o)
        for (Eigen::Index j = 0; j < t_out; ++j) {
          C acc = ps[1]->value(o, 0);
          for (Eigen::Index ci = 0; ci < 3; ++ci)
            for (Eigen::Index p = 0; p < 3; ++p) {
              const Eigen::Index src = j * rg.stride + p * rg.dilation - rg.pad;
              if (src >= 0 && src < 9)
                acc += ps[0]->value(o, p * 3 + ci) * xi.example(b)(ci, src);
            }
          CHECK(std::abs(y.example(b)(o, j) - acc) < 1e-12);
        }
  }
}

TEST_CASE("activation anchor values") {
  Tensor<C> x = vec_tensor<C>({{1, -2}});
  ReLU<C> crelu;
  auto y = crelu.forward(x);
  CHECK(y.v(0, 0) == C(1, 0));
  // idempotent
  auto y2 = crelu.forward(y);
  CHECK(y2.v(0, 0) == y.v(0, 0));

  Cardioid<C> card;
  CHECK(std::abs(card.forward(vec_tensor<C>({{-1, 0}})).v(0, 0)) < 1e-15);
  CHECK(std::abs(card.forward(vec_tensor<C>({{1, 0}})).v(0, 0) - C(1, 0)) < 1e-15);

  PhaseTanh<C> pt;
  CHECK(std::abs(pt.forward(vec_tensor<C>({{0, 0}})).v(0, 0)) < 1e-15);
  auto rng = nqr::rng::stream(3, nqr::rng::kInit);
  std::normal_distribution<double> g;
  for (int i = 0; i < 50; ++i) {
    auto big = vec_tensor<C>({{5 * g(rng), 5 * g(rng)}});
    CHECK(std::abs(pt.forward(big).v(0, 0)) < 1.0);
  }
}

TEST_CASE("loss anchor values and formula oracles") {
  auto pred = vec_tensor<C>({{0, 0}});
  auto target = vec_tensor<C>({{1, 1}});
  CHECK(loss_eval(LossKind::ComplexMse, target, target).value == 0.0);
  CHECK(loss_eval(LossKind::ComplexMse, pred, target).value ==
        doctest::Approx(2.0));
  CHECK(loss_eval(LossKind::Mse, pred, target).value == doctest::Approx(1.0));

  auto rng = nqr::rng::stream(4, nqr::rng::kInit);
  std::normal_distribution<double> g;
  Tensor<C> p = Tensor<C>::zeros(3, 2, 4);
  Tensor<C> t = Tensor<C>::zeros(3, 2, 4);
  for (Eigen::Index i = 0; i < p.v.size(); ++i) {
    p.v(i) = {g(rng), g(rng)};
    t.v(i) = {g(rng), g(rng)};
  }
  // scalar-loop oracles for each kind
  double sq = 0.0, l1 = 0.0;
  double per_sig[2] = {0, 0}, sig_pow[2] = {0, 0};
  for (Eigen::Index b = 0; b < 2; ++b)
    for (Eigen::Index c = 0; c < 3; ++c)
      for (Eigen::Index j = 0; j < 4; ++j) {
        const C d = p.example(b)(c, j) - t.example(b)(c, j);
        sq += std::norm(d);
        l1 += std::abs(d.real()) + std::abs(d.imag());
        per_sig[b] += std::norm(d);
        sig_pow[b] += std::norm(t.example(b)(c, j));
      }
  const double n_entries = 24.0, n_comp = 48.0;
  CHECK(loss_eval(LossKind::ComplexMse, p, t).value ==
        doctest::Approx(sq / n_entries).epsilon(1e-10));
  CHECK(loss_eval(LossKind::Mse, p, t).value ==
        doctest::Approx(sq / n_comp).epsilon(1e-10));
  CHECK(loss_eval(LossKind::L1, p, t).value ==
        doctest::Approx(l1 / n_comp).epsilon(1e-10));
  const double logmse =
      0.5 * (std::log(per_sig[0] + 1e-12) + std::log(per_sig[1] + 1e-12));
  CHECK(loss_eval(LossKind::ComplexLogMse, p, t).value ==
        doctest::Approx(logmse).epsilon(1e-10));
  CHECK(loss_eval(LossKind::LogMse, p, t).value ==
        doctest::Approx(logmse).epsilon(1e-10));
  const double snr =
      0.5 * (-10.0 * std::log10(sig_pow[0] / (per_sig[0] + 1e-12)) +
             -10.0 * std::log10(sig_pow[1] / (per_sig[1] + 1e-12)));
  CHECK(loss_eval(LossKind::SnrLoss, p, t).value ==
        doctest::Approx(snr).epsilon(1e-10));
  CHECK(loss_eval(LossKind::ComplexSdr, p, t).value ==
        doctest::Approx(snr).epsilon(1e-10));
}

TEST_CASE("backward through a linear layer routes real-pair gradients") {
  auto rng = nqr::rng::stream(5, nqr::rng::kInit);
  // d(sum of real parts)/d(re) = 1, /d(im) = 0
  Linear<C> lin(2, 2, rng);
  auto x = vec_tensor<C>({{0.3, -0.4}, {1.2, 0.9}});
  lin.forward(x);
  Tensor<C> g = Tensor<C>::zeros(2, 1, 1);
  g.v.setConstant(C(1.0, 0.0));  // gradient of sum-of-real-parts
  lin.backward(g);
  std::vector<Param<C>*> ps;
  lin.collect_params(ps);
  // dL/dW_rc = conj(x_c) for every output row
  for (Eigen::Index r = 0; r < 2; ++r)
    for (Eigen::Index c = 0; c < 2; ++c)
      CHECK(std::abs(ps[0]->grad(r, c) - std::conj(x.v(c, 0))) < 1e-14);

  // Wirtinger pair for |w x - y|^2 with a single complex weight
  Linear<C> w1(1, 1, rng);
  w1.bias().value.setZero();
  const C w = w1.weight().value(0, 0);
  const C xv{0.7, -1.1}, yv{0.2, 0.5};
  auto pred = w1.forward(vec_tensor<C>({xv}));
  auto lr = loss_eval(LossKind::ComplexMse, pred, vec_tensor<C>({yv}));
  w1.backward(lr.grad);
  const C d = w * xv - yv;
  const C expected = 2.0 * std::conj(xv) * d;  // (dL/dRe w, dL/dIm w)
  std::vector<Param<C>*> ps1;
  w1.collect_params(ps1);
  CHECK(std::abs(ps1[0]->grad(0, 0) - expected) < 1e-12);
}

TEST_CASE("adam anchors") {
  Param<double> p;
  p.resize(3, 1);
  p.value << 1.0, 2.0, 3.0;
  Adam<double> opt({&p}, {.lr = 0.01});

  p.zero_grad();
  opt.step();  // zero gradient: no movement
  CHECK(p.value(0) == 1.0);
  CHECK(p.value(2) == 3.0);

  Param<double> q;
  q.resize(1, 1);
  q.value(0, 0) = 0.5;
  Adam<double> opt2({&q}, {.lr = 0.01});
  q.grad(0, 0) = 1.0;
  opt2.step();
  // bias-corrected first step moves by ~lr
  CHECK(q.value(0, 0) == doctest::Approx(0.5 - 0.01).epsilon(1e-6));

  CHECK_THROWS(Adam<double>({&q}, {.lr = 0.0}));
}

TEST_CASE("arch helpers round trip") {
  auto rng = nqr::rng::stream(6, nqr::rng::kInit);
  std::normal_distribution<double> g;
  Tensor<C> x = Tensor<C>::zeros(3, 2, 4);
  for (Eigen::Index i = 0; i < x.v.size(); ++i) x.v(i) = {g(rng), g(rng)};

  auto re = real_part(x);
  auto im = imag_part(x);
  CHECK(join_parts(re, im).v == x.v);

  auto stacked = stack_batch(re, im);
  CHECK(stacked.batch == 4);
  auto [re2, im2] = unstack_batch(stacked);
  CHECK(re2.v == re.v);
  CHECK(im2.v == im.v);

  auto ch = stack_channels(re, im);
  CHECK(ch.channels() == 6);
  auto [re3, im3] = unstack_channels(ch);
  CHECK(re3.v == re.v);
  CHECK(im3.v == im.v);
}

TEST_CASE("gradient checks on a reduced sweep") {
  // The acceptance suite runs the full 10-config sweep; keep unit runs quick.
  auto results = run_gradcheck_suite(2, 1e-5, 99);
  CHECK(results.size() == 5 * 5 * 7 + 5 * 4 * 4);
  for (const auto& r : results) {
    INFO(r.name);
    CHECK(r.max_rel_err <= 1e-4);
  }
}

TEST_SUITE_END();
