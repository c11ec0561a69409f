#pragma once

#include <stdexcept>
#include <string>

#include "nqr/nn/tensor.hpp"

namespace nqr::nn {

// Wiring schemes between complex data and the network core:
//  ComplexNet  - complex weights on complex data
//  DualReal1   - one real net applied independently to re and im
//  DualReal2   - two real nets, one per component
//  DualReal1C  - components concatenated (vector or channels), one real net
enum class ArchMode { ComplexNet, DualReal1, DualReal2, DualReal1C };

inline std::string arch_mode_name(ArchMode m) {
  switch (m) {
    case ArchMode::ComplexNet: return "complex";
    case ArchMode::DualReal1: return "dualreal1";
    case ArchMode::DualReal2: return "dualreal2";
    case ArchMode::DualReal1C: return "dualreal1c";
  }
  return "?";
}

inline ArchMode arch_mode_from_name(const std::string& s) {
  if (s == "complex") return ArchMode::ComplexNet;
  if (s == "dualreal1") return ArchMode::DualReal1;
  if (s == "dualreal2") return ArchMode::DualReal2;
  if (s == "dualreal1c") return ArchMode::DualReal1C;
  throw std::invalid_argument("unknown arch mode '" + s + "'");
}

inline Tensor<double> real_part(const Tensor<CScalar>& x) {
  return {x.v.real(), x.batch, x.time};
}

inline Tensor<double> imag_part(const Tensor<CScalar>& x) {
  return {x.v.imag(), x.batch, x.time};
}

inline Tensor<CScalar> join_parts(const Tensor<double>& re,
                                  const Tensor<double>& im) {
  Tensor<CScalar> out;
  out.batch = re.batch;
  out.time = re.time;
  out.v.resize(re.v.rows(), re.v.cols());
  out.v.real() = re.v;
  out.v.imag() = im.v;
  return out;
}

// [re examples..., im examples...] as a doubled batch (DualReal1).
inline Tensor<double> stack_batch(const Tensor<double>& re,
                                  const Tensor<double>& im) {
  Tensor<double> out;
  out.batch = 2 * re.batch;
  out.time = re.time;
  out.v.resize(re.v.rows(), 2 * re.v.cols());
  out.v.leftCols(re.v.cols()) = re.v;
  out.v.rightCols(im.v.cols()) = im.v;
  return out;
}

inline std::pair<Tensor<double>, Tensor<double>> unstack_batch(
    const Tensor<double>& s) {
  const Eigen::Index half = s.v.cols() / 2;
  Tensor<double> re{s.v.leftCols(half), s.batch / 2, s.time};
  Tensor<double> im{s.v.rightCols(half), s.batch / 2, s.time};
  return {std::move(re), std::move(im)};
}

// [re channels; im channels] (DualReal1C).
inline Tensor<double> stack_channels(const Tensor<double>& re,
                                     const Tensor<double>& im) {
  Tensor<double> out;
  out.batch = re.batch;
  out.time = re.time;
  out.v.resize(2 * re.v.rows(), re.v.cols());
  out.v.topRows(re.v.rows()) = re.v;
  out.v.bottomRows(im.v.rows()) = im.v;
  return out;
}

inline std::pair<Tensor<double>, Tensor<double>> unstack_channels(
    const Tensor<double>& s) {
  const Eigen::Index half = s.v.rows() / 2;
  Tensor<double> re{s.v.topRows(half), s.batch, s.time};
  Tensor<double> im{s.v.bottomRows(half), s.batch, s.time};
  return {std::move(re), std::move(im)};
}

}  // namespace nqr::nn
