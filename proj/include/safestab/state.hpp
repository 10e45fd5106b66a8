#pragma once

#include <Eigen/Core>

namespace safestab {

/// State vector, dimension n >= 1.
using State = Eigen::VectorXd;

}  // namespace safestab
