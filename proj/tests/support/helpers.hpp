#pragma once

#include "causalq/qlin.hpp"

namespace test_helpers {

using causalq::qlin::Cx;
using causalq::qlin::Mat;
using causalq::qlin::Vec;

inline bool mat_close(const Mat& a, const Mat& b, double tol = 1e-12) {
    return a.rows() == b.rows() && a.cols() == b.cols() &&
           (a - b).cwiseAbs().maxCoeff() <= tol;
}

inline bool vec_close(const Vec& a, const Vec& b, double tol = 1e-12) {
    return a.size() == b.size() && (a - b).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace test_helpers
