#pragma once

#include <Eigen/Core>
#include <memory>
#include <vector>

namespace smrls {

/**
 * Affine map from raw operating ranges onto the unit box [-1,1]^n.
 * Outputs are clamped so downstream partition encoding always lands
 * inside the lattice even if a raw sample grazes its bound.
 */
class Normalizer {
 public:
  Normalizer(Eigen::VectorXd lo, Eigen::VectorXd hi);

  int dimension() const { return static_cast<int>(lo_.size()); }
  void normalize_into(const Eigen::VectorXd& raw, Eigen::VectorXd& out) const;
  Eigen::VectorXd normalize(const Eigen::VectorXd& raw) const;

 private:
  Eigen::VectorXd lo_;
  Eigen::VectorXd hi_;
};

// Number of lattice cells per axis for a total cell count that must be a
// perfect dimension-th power. Throws std::invalid_argument otherwise.
int partitions_per_dim(int total_partitions, int dimension);

// 1-based cell index of a normalized point. Along each axis the cell of
// coordinate v is clamp(ceil((v+1)*m/2 - 1), 0, m-1); cells are open at the
// lower face and closed at the upper face, with the clamp absorbing v = -1.
// The first axis varies fastest in the flattened index.
int encode_partition(const Eigen::VectorXd& normalized_input,
                     int total_partitions);

// One synthesized sample: representative input and output for a cell.
struct SynthSample {
  Eigen::VectorXd input;
  double output = 0.0;
};

// Policy deciding what a cell retains when a new sample lands in it.
class MemoryUpdateRule {
 public:
  virtual ~MemoryUpdateRule() = default;
  virtual SynthSample apply(const SynthSample& stored,
                            const SynthSample& incoming) const = 0;
};

// Keep only the most recent sample seen in the cell.
class LatestSampleRule : public MemoryUpdateRule {
 public:
  SynthSample apply(const SynthSample& stored,
                    const SynthSample& incoming) const override;
};

/**
 * Dense per-cell store of synthesized samples over the lattice.
 * Unvisited cells hold a zero sample; they contribute nothing to the
 * synthesized objective until first touched.
 */
class PartitionStore {
 public:
  PartitionStore(int total_partitions, int dimension);

  int total() const { return total_; }
  int dimension() const { return dimension_; }
  int per_dim() const { return per_dim_; }
  int visited_count() const { return visited_count_; }
  bool visited(int index) const;

  // Synthesized sample of a cell (zeros if unvisited). Index is 1-based.
  SynthSample lookup(int index) const;

  struct UpdateResult {
    SynthSample displaced;  // what the cell held before this update
    bool visited_before = false;
  };

  // Replace the cell content per the rule. The sample's input must encode
  // to the given index; anything else is a caller bug and throws.
  UpdateResult update(int index, const SynthSample& sample,
                      const MemoryUpdateRule& rule);

 private:
  void check_index(int index) const;

  int total_;
  int dimension_;
  int per_dim_;
  int visited_count_ = 0;
  Eigen::MatrixXd inputs_;   // total x dimension
  Eigen::VectorXd outputs_;  // total
  std::vector<unsigned char> visited_;
};

}  // namespace smrls
