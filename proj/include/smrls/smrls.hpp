#pragma once

#include <Eigen/Core>
#include <memory>

#include "smrls/input_space.hpp"
#include "smrls/rbf_network.hpp"

namespace smrls {

/**
 * Selective-memory RLS trainer.
 *
 * Each step replaces the synthesized sample of the partition the input
 * falls in and re-optimizes the weights against the store, not the raw
 * history. The covariance tracks the inverse of the synthesized
 * information matrix exactly through paired rank-one changes, so the
 * weights always equal the batch minimizer over the current store.
 *
 * On a partition's first visit there is nothing to remove: the displaced
 * zero sample never entered the information matrix, so the removal half
 * of the step is skipped.
 */
class SmrlsTrainer {
 public:
  SmrlsTrainer(const RbfNetwork& net, Normalizer normalizer,
               int total_partitions, Eigen::VectorXd w0, Eigen::MatrixXd p0,
               std::shared_ptr<const MemoryUpdateRule> rule =
                   std::make_shared<LatestSampleRule>());

  // Raw input is normalized internally; measurement is the scalar target.
  void step(const Eigen::VectorXd& raw_input, double measurement);

  const Eigen::VectorXd& weights() const { return weights_; }
  const Eigen::MatrixXd& covariance() const { return covariance_; }
  const PartitionStore& store() const { return store_; }
  const RbfNetwork& network() const { return net_; }
  const Normalizer& normalizer() const { return normalizer_; }
  const Eigen::MatrixXd& initial_covariance() const { return p0_; }
  int last_partition() const { return last_partition_; }

  // Copy of the current weights, for end-of-run snapshots.
  Eigen::VectorXd learned_knowledge() const { return weights_; }

  // Direct reconstruction p0^{-1} + sum over visited cells of phi phi'.
  // Reference route for consistency checks; costs a dense factorization.
  Eigen::MatrixXd rebuild_information_matrix() const;

 private:
  const RbfNetwork& net_;
  Normalizer normalizer_;
  PartitionStore store_;
  std::shared_ptr<const MemoryUpdateRule> rule_;
  Eigen::VectorXd weights_;
  Eigen::MatrixXd covariance_;
  Eigen::MatrixXd p0_;
  int last_partition_ = 0;

  Eigen::VectorXd xnorm_;
  Eigen::VectorXd phi_new_;
  Eigen::VectorXd phi_old_;
  Eigen::VectorXd work_;
  SynthSample incoming_;
};

}  // namespace smrls
