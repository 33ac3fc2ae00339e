#include "canon/attribute_window.hpp"

#include <string>

namespace canon {

AttributeWindow::AttributeWindow(std::span<const CanonicalSample> samples,
                                 std::optional<std::size_t> horizon, AccessLog* log)
    : samples_(samples),
      origin_(samples.empty() ? 0 : samples.size() - 1),
      current_(origin_),
      horizon_(horizon),
      log_(log) {}

std::size_t AttributeWindow::earliest() const {
  if (!horizon_ || *horizon_ >= origin_) return 0;
  return origin_ - *horizon_;
}

const CanonicalSample& AttributeWindow::at(std::size_t position) const {
  if (position > current_ || position >= samples_.size()) {
    if (log_) log_->future_access = true;
    throw CausalityError("attribute window: read of step " + std::to_string(position) +
                         " while at step " + std::to_string(current_));
  }
  if (position < earliest()) {
    if (log_) log_->out_of_horizon = true;
    throw LocalityError("attribute window: read of step " + std::to_string(position) + " is " +
                        std::to_string(origin_ - position) + " steps back, horizon is " +
                        std::to_string(*horizon_));
  }
  if (log_) {
    ++log_->reads;
    const std::size_t back = origin_ - position;
    if (back > log_->max_lookback) log_->max_lookback = back;
  }
  return samples_[position];
}

const CanonicalSample& AttributeWindow::lookback(std::size_t back) const {
  if (back > current_) {
    if (log_) log_->out_of_horizon = true;
    throw LocalityError("attribute window: lookback " + std::to_string(back) +
                        " reaches before the trajectory start");
  }
  return at(current_ - back);
}

AttributeWindow AttributeWindow::rebased(std::size_t position) const {
  if (position > current_) {
    if (log_) log_->future_access = true;
    throw CausalityError("attribute window: rebase to future step " + std::to_string(position));
  }
  AttributeWindow w(*this);
  w.current_ = position;
  return w;
}

}  // namespace canon
