#include "nqr/nn/gradcheck.hpp"

#include <random>

#include "nqr/rng.hpp"

namespace nqr::nn {

namespace {

enum class LayerTag { Linear, Conv, Depthwise, ConvT, Norm };

const char* layer_name(LayerTag t) {
  switch (t) {
    case LayerTag::Linear: return "linear";
    case LayerTag::Conv: return "conv";
    case LayerTag::Depthwise: return "depthwise";
    case LayerTag::ConvT: return "convt";
    case LayerTag::Norm: return "channelnorm";
  }
  return "?";
}

enum class ActTag { ReLU, Cardioid, PhaseTanh, PReLU, Sigmoid, Hardtanh };

const char* act_name(ActTag t) {
  switch (t) {
    case ActTag::ReLU: return "relu";
    case ActTag::Cardioid: return "cardioid";
    case ActTag::PhaseTanh: return "phasetanh";
    case ActTag::PReLU: return "prelu";
    case ActTag::Sigmoid: return "sigmoid";
    case ActTag::Hardtanh: return "hardtanh";
  }
  return "?";
}

template <class S>
Tensor<S> random_tensor(std::mt19937_64& rng, Eigen::Index ch, Eigen::Index b,
                        Eigen::Index t) {
  std::normal_distribution<double> g;
  Tensor<S> x = Tensor<S>::zeros(ch, b, t);
  for (Eigen::Index i = 0; i < x.v.size(); ++i) {
    if constexpr (is_complex_v<S>) {
      const double re = g(rng);
      const double im = g(rng);
      x.v(i) = {re, im};
    } else {
      x.v(i) = g(rng);
    }
  }
  return x;
}

// Activation kinks: finite differences are only trusted when every
// pre-activation component is clear of them.
template <class S>
bool clear_of_kinks(ActTag act, const Tensor<S>& pre) {
  constexpr double kMargin = 1e-3;
  auto comp_ok = [&](double u) {
    switch (act) {
      case ActTag::ReLU:
      case ActTag::PReLU: return std::abs(u) > kMargin;
      case ActTag::Hardtanh: return std::abs(std::abs(u) - 1.0) > kMargin;
      default: return true;
    }
  };
  for (Eigen::Index i = 0; i < pre.v.size(); ++i) {
    if constexpr (is_complex_v<S>) {
      if (act == ActTag::Cardioid && std::abs(pre.v(i)) < kMargin) return false;
      if (!comp_ok(pre.v(i).real()) || !comp_ok(pre.v(i).imag())) return false;
    } else {
      if (!comp_ok(pre.v(i))) return false;
    }
  }
  return true;
}

template <class S>
bool clear_of_l1_kink(const Tensor<S>& pred, const Tensor<S>& target) {
  constexpr double kMargin = 1e-3;
  for (Eigen::Index i = 0; i < pred.v.size(); ++i) {
    if constexpr (is_complex_v<S>) {
      if (std::abs(pred.v(i).real() - target.v(i).real()) < kMargin) return false;
      if (std::abs(pred.v(i).imag() - target.v(i).imag()) < kMargin) return false;
    } else {
      if (std::abs(pred.v(i) - target.v(i)) < kMargin) return false;
    }
  }
  return true;
}

template <class S>
std::unique_ptr<Module<S>> make_act(ActTag tag, Eigen::Index channels) {
  switch (tag) {
    case ActTag::ReLU: return std::make_unique<ReLU<S>>();
    case ActTag::PReLU: return std::make_unique<PReLU<S>>(channels);
    case ActTag::Sigmoid: return std::make_unique<Sigmoid<S>>();
    case ActTag::Cardioid:
      if constexpr (is_complex_v<S>) return std::make_unique<Cardioid<S>>();
      break;
    case ActTag::PhaseTanh:
      if constexpr (is_complex_v<S>) return std::make_unique<PhaseTanh<S>>();
      break;
    case ActTag::Hardtanh:
      if constexpr (!is_complex_v<S>) return std::make_unique<Hardtanh<S>>();
      break;
  }
  throw std::invalid_argument("gradcheck: activation/scalar mismatch");
}

template <class S>
double check_one_config(LayerTag layer, ActTag act, LossKind loss,
                        std::mt19937_64& rng, double eps) {
  std::uniform_int_distribution<int> d2(0, 1);
  for (int attempt = 0; attempt < 200; ++attempt) {
    const Eigen::Index c_in = 2 + d2(rng);
    const Eigen::Index c_mid = 2 + 2 * d2(rng);
    const Eigen::Index c_out = 2 + d2(rng);
    const Eigen::Index batch = 1 + d2(rng);
    const Eigen::Index time = 5 + 3 * d2(rng);

    Stack<S> chain;
    chain.layers.push_back(std::make_unique<Linear<S>>(c_in, c_mid, rng));
    chain.layers.push_back(make_act<S>(act, c_mid));
    switch (layer) {
      case LayerTag::Linear:
        chain.layers.push_back(std::make_unique<Linear<S>>(c_mid, c_out, rng));
        break;
      case LayerTag::Conv: {
        ConvGeometry g;
        g.in_ch = c_mid;
        g.out_ch = c_out;
        g.kernel = 2 + d2(rng);
        g.stride = 1 + d2(rng);
        g.dilation = 1 + d2(rng);
        g.pad = d2(rng);
        chain.layers.push_back(std::make_unique<Conv1d<S>>(g, rng));
        break;
      }
      case LayerTag::Depthwise: {
        ConvGeometry g;
        g.in_ch = c_mid;
        g.out_ch = c_mid;
        g.kernel = 2 + d2(rng);
        g.dilation = 1 + d2(rng);
        g.pad = 1 + d2(rng);
        g.depthwise = true;
        chain.layers.push_back(std::make_unique<Conv1d<S>>(g, rng));
        break;
      }
      case LayerTag::ConvT:
        chain.layers.push_back(std::make_unique<ConvT1d<S>>(
            c_mid, c_out, 2 + d2(rng), 1 + d2(rng), rng));
        break;
      case LayerTag::Norm:
        chain.layers.push_back(std::make_unique<ChannelNorm<S>>(c_mid));
        break;
    }

    Tensor<S> x = random_tensor<S>(rng, c_in, batch, time);
    Tensor<S> pre = chain.layers[0]->forward(x);
    if (!clear_of_kinks<S>(act, pre)) continue;

    Tensor<S> pred = chain.forward(x);
    Tensor<S> target =
        random_tensor<S>(rng, pred.channels(), pred.batch, pred.time);
    if (loss == LossKind::L1 && !clear_of_l1_kink<S>(pred, target)) continue;

    return grad_check_chain<S>(chain, loss, x, target, eps);
  }
  throw std::runtime_error("gradcheck: could not sample a kink-free config");
}

template <class S>
void run_scalar_suite(const std::string& prefix,
                      const std::vector<ActTag>& acts,
                      const std::vector<LossKind>& losses,
                      int configs_per_combo, double eps, std::uint64_t seed,
                      std::vector<GradCheckCase>& out) {
  const LayerTag layers[] = {LayerTag::Linear, LayerTag::Conv,
                             LayerTag::Depthwise, LayerTag::ConvT,
                             LayerTag::Norm};
  std::uint64_t combo = 0;
  for (LayerTag layer : layers)
    for (ActTag act : acts)
      for (LossKind loss : losses) {
        GradCheckCase c;
        c.name = prefix + "/" + layer_name(layer) + "+" + act_name(act) + "+" +
                 loss_name(loss);
        c.configs = configs_per_combo;
        for (int k = 0; k < configs_per_combo; ++k) {
          auto rng = rng::stream(seed, combo, static_cast<std::uint64_t>(k));
          c.max_rel_err = std::max(
              c.max_rel_err, check_one_config<S>(layer, act, loss, rng, eps));
        }
        out.push_back(std::move(c));
        ++combo;
      }
}

}  // namespace

std::vector<GradCheckCase> run_gradcheck_suite(int configs_per_combo,
                                               double eps,
                                               std::uint64_t seed) {
  std::vector<GradCheckCase> out;
  run_scalar_suite<CScalar>(
      "complex",
      {ActTag::ReLU, ActTag::Cardioid, ActTag::PhaseTanh, ActTag::PReLU,
       ActTag::Sigmoid},
      {LossKind::ComplexMse, LossKind::Mse, LossKind::ComplexLogMse,
       LossKind::LogMse, LossKind::ComplexSdr, LossKind::L1, LossKind::SnrLoss},
      configs_per_combo, eps, seed, out);
  run_scalar_suite<double>(
      "real", {ActTag::ReLU, ActTag::Hardtanh, ActTag::PReLU, ActTag::Sigmoid},
      {LossKind::Mse, LossKind::LogMse, LossKind::L1, LossKind::SnrLoss},
      configs_per_combo, eps, seed + 1, out);
  return out;
}

}  // namespace nqr::nn
