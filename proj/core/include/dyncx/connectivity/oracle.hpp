#pragma once

#include <cstddef>
#include <memory>

#include "dyncx/connectivity/graph.hpp"
#include "dyncx/connectivity/verifier.hpp"

namespace dyncx::conn {

// A dynamic connectivity subroutine under edge toggles. Every public call
// counts toward calls().
class ConnectivityOracle {
 public:
  virtual ~ConnectivityOracle() = default;

  void insert(Edge e) {
    ++calls_;
    do_insert(e);
  }
  void erase(Edge e) {
    ++calls_;
    do_erase(e);
  }
  bool connected() {
    ++calls_;
    return do_connected();
  }
  std::size_t calls() const { return calls_; }
  virtual std::unique_ptr<ConnectivityOracle> clone() const = 0;

 protected:
  virtual void do_insert(Edge e) = 0;
  virtual void do_erase(Edge e) = 0;
  virtual bool do_connected() = 0;

 private:
  std::size_t calls_ = 0;
};

// BFS over the whole graph on each query.
class RebuildConnectivity final : public ConnectivityOracle {
 public:
  explicit RebuildConnectivity(DynamicGraph g) : graph_(std::move(g)) {}
  std::unique_ptr<ConnectivityOracle> clone() const override { return std::make_unique<RebuildConnectivity>(*this); }
  const DynamicGraph& graph() const { return graph_; }

 protected:
  void do_insert(Edge e) override { graph_.insert(e); }
  void do_erase(Edge e) override { graph_.erase(e); }
  bool do_connected() override { return is_connected(graph_); }

 private:
  DynamicGraph graph_;
};

// The connectivity verifier driven by the honest prover; the answer is the
// verifier's x.
class VerifierBackedConnectivity final : public ConnectivityOracle {
 public:
  explicit VerifierBackedConnectivity(DynamicGraph g);
  std::unique_ptr<ConnectivityOracle> clone() const override {
    return std::make_unique<VerifierBackedConnectivity>(*this);
  }
  const ConnVerifier& verifier() const { return verifier_; }

 protected:
  void do_insert(Edge e) override { feed(EdgeUpdate{true, e.u, e.v}); }
  void do_erase(Edge e) override { feed(EdgeUpdate{false, e.u, e.v}); }
  bool do_connected() override { return x_; }

 private:
  void feed(const Update& u);

  ConnVerifier verifier_;
  bool x_ = false;
};

}  // namespace dyncx::conn
