#include "antsel/channel.hpp"

namespace antsel {

GainMatrix::GainMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("GainMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

void ChannelRealization::check_consistent() const {
  if (h.rows() == 0 || h.cols() == 0 || g.cols() == 0) {
    throw std::invalid_argument("channel realization has an empty dimension");
  }
  if (h.rows() != g.rows()) {
    throw std::invalid_argument("h and g must have the same number of BS rows");
  }
}

}  // namespace antsel
