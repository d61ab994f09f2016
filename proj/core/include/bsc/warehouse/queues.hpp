#pragma once

#include <deque>
#include <vector>

namespace bsc {

/// Pending-order queues with soft capacity limits. Exceeding a cap does not
/// stop intake; every exceedance is logged as a constraint violation and
/// reported with the run's metrics.
struct OrderQueues {
  std::deque<int> retrieval;
  std::deque<int> delivery;
  int cap_retrieval = 330;
  int cap_delivery = 240;
  std::vector<double> violations;  // timestamps

  int retrieval_len() const { return static_cast<int>(retrieval.size()); }
  int delivery_len() const { return static_cast<int>(delivery.size()); }

  void push_retrieval(int order, double now) {
    retrieval.push_back(order);
    if (retrieval_len() > cap_retrieval) violations.push_back(now);
  }
  void push_delivery(int order, double now) {
    delivery.push_back(order);
    if (delivery_len() > cap_delivery) violations.push_back(now);
  }
};

}  // namespace bsc
