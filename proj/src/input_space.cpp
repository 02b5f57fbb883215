#include "smrls/input_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace smrls {

Normalizer::Normalizer(Eigen::VectorXd lo, Eigen::VectorXd hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.size() != hi_.size() || lo_.size() == 0)
    throw std::invalid_argument("normalizer bounds size mismatch");
  for (int i = 0; i < lo_.size(); ++i) {
    if (!(hi_(i) > lo_(i)))
      throw std::invalid_argument("normalizer requires hi > lo per axis");
  }
}

void Normalizer::normalize_into(const Eigen::VectorXd& raw,
                                Eigen::VectorXd& out) const {
  if (raw.size() != lo_.size())
    throw std::invalid_argument("input dimension mismatch");
  out.resize(raw.size());
  for (int i = 0; i < raw.size(); ++i) {
    const double v = (2.0 * raw(i) - (hi_(i) + lo_(i))) / (hi_(i) - lo_(i));
    out(i) = std::clamp(v, -1.0, 1.0);
  }
}

Eigen::VectorXd Normalizer::normalize(const Eigen::VectorXd& raw) const {
  Eigen::VectorXd out;
  normalize_into(raw, out);
  return out;
}

int partitions_per_dim(int total_partitions, int dimension) {
  if (total_partitions < 1)
    throw std::invalid_argument("total_partitions must be >= 1");
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  const double guess = std::pow(static_cast<double>(total_partitions),
                                1.0 / static_cast<double>(dimension));
  for (int m = std::max(1, static_cast<int>(std::floor(guess)) - 1);
       m <= static_cast<int>(std::ceil(guess)) + 1; ++m) {
    long p = 1;
    for (int d = 0; d < dimension; ++d) p *= m;
    if (p == total_partitions) return m;
  }
  throw std::invalid_argument(
      "total_partitions (" + std::to_string(total_partitions) +
      ") is not a perfect power of the input dimension");
}

int encode_partition(const Eigen::VectorXd& normalized_input,
                     int total_partitions) {
  const int n = static_cast<int>(normalized_input.size());
  const int m = partitions_per_dim(total_partitions, n);
  long index = 0;
  long stride = 1;
  for (int i = 0; i < n; ++i) {
    const double v = normalized_input(i);
    if (v < -1.0 || v > 1.0)
      throw std::invalid_argument("normalized input outside [-1,1]");
    int cell = static_cast<int>(std::ceil((v + 1.0) * m / 2.0 - 1.0));
    cell = std::clamp(cell, 0, m - 1);
    index += stride * cell;
    stride *= m;
  }
  return static_cast<int>(index) + 1;
}

SynthSample LatestSampleRule::apply(const SynthSample&,
                                    const SynthSample& incoming) const {
  return incoming;
}

PartitionStore::PartitionStore(int total_partitions, int dimension)
    : total_(total_partitions),
      dimension_(dimension),
      per_dim_(partitions_per_dim(total_partitions, dimension)),
      inputs_(Eigen::MatrixXd::Zero(total_partitions, dimension)),
      outputs_(Eigen::VectorXd::Zero(total_partitions)),
      visited_(static_cast<std::size_t>(total_partitions), 0) {}

void PartitionStore::check_index(int index) const {
  if (index < 1 || index > total_)
    throw std::out_of_range("partition index out of range");
}

bool PartitionStore::visited(int index) const {
  check_index(index);
  return visited_[static_cast<std::size_t>(index - 1)] != 0;
}

SynthSample PartitionStore::lookup(int index) const {
  check_index(index);
  SynthSample s;
  s.input = inputs_.row(index - 1).transpose();
  s.output = outputs_(index - 1);
  return s;
}

PartitionStore::UpdateResult PartitionStore::update(
    int index, const SynthSample& sample, const MemoryUpdateRule& rule) {
  check_index(index);
  if (sample.input.size() != dimension_)
    throw std::invalid_argument("sample dimension mismatch");
  if (encode_partition(sample.input, total_) != index)
    throw std::invalid_argument("sample does not encode to target partition");

  UpdateResult res;
  res.visited_before = visited_[static_cast<std::size_t>(index - 1)] != 0;
  res.displaced.input = inputs_.row(index - 1).transpose();
  res.displaced.output = outputs_(index - 1);

  const SynthSample next = rule.apply(res.displaced, sample);
  inputs_.row(index - 1) = next.input.transpose();
  outputs_(index - 1) = next.output;
  if (!res.visited_before) {
    visited_[static_cast<std::size_t>(index - 1)] = 1;
    ++visited_count_;
  }
  return res;
}

}  // namespace smrls
