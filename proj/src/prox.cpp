#include "infpush/prox.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace infpush {

void GroupLayout::check_vector(const Vec& v) const {
  if (group_size < 1 || group_count < 1) {
    throw std::invalid_argument("group layout must have positive sizes");
  }
  if (v.size() != total()) {
    throw std::invalid_argument("vector length does not match group layout");
  }
}

Vec soft_threshold(const Vec& v, double tau) {
  if (tau < 0.0) throw std::invalid_argument("soft_threshold: tau must be nonnegative");
  return v.unaryExpr([tau](double x) {
    double shrunk = std::abs(x) - tau;
    return shrunk > 0.0 ? (x > 0.0 ? shrunk : -shrunk) : 0.0;
  });
}

Vec project_nonneg(const Vec& v) { return v.cwiseMax(0.0); }

namespace {

// Per-group view used by the ball projection: |v| sorted descending plus
// prefix sums. For a clip level t, the marginal cost of lowering t is
// theta(t) = sum_{w_i > t} (w_i - t); its inverse is level_at below.
struct GroupProfile {
  std::vector<double> sorted_abs;   // descending
  std::vector<double> prefix;       // prefix[k] = sum of largest k values
  double total = 0.0;

  // Clip level t such that sum_{w_i > t} (w_i - t) = theta, or 0 once the
  // whole group is absorbed (theta >= total).
  double level_at(double theta) const {
    if (theta >= total) return 0.0;
    const Index count = static_cast<Index>(sorted_abs.size());
    // Segment k covers theta in [prefix[k] - k*w(k), prefix[k] - k*w(k+1)],
    // with w(count+1) = 0; boundaries are nondecreasing in k.
    Index lo = 1, hi = count;
    while (lo < hi) {
      Index mid = lo + (hi - lo) / 2;
      double next = mid < count ? sorted_abs[mid] : 0.0;
      double upper = prefix[mid] - static_cast<double>(mid) * next;
      if (theta <= upper) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    double t = (prefix[lo] - theta) / static_cast<double>(lo);
    return t > 0.0 ? t : 0.0;
  }

  // Segment index active at theta (number of entries above the clip level).
  Index segment_at(double theta) const {
    if (theta >= total) return 0;
    const Index count = static_cast<Index>(sorted_abs.size());
    Index lo = 1, hi = count;
    while (lo < hi) {
      Index mid = lo + (hi - lo) / 2;
      double next = mid < count ? sorted_abs[mid] : 0.0;
      double upper = prefix[mid] - static_cast<double>(mid) * next;
      if (theta <= upper) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return lo;
  }
};

}  // namespace

Vec project_l1_linf_ball(const Vec& v, const GroupLayout& layout, double tau) {
  layout.check_vector(v);
  if (tau < 0.0) {
    throw std::invalid_argument("project_l1_linf_ball: tau must be nonnegative");
  }
  if (tau == 0.0) return Vec::Zero(v.size());

  const Index m = layout.group_size;
  const Index n = layout.group_count;

  std::vector<GroupProfile> groups(static_cast<size_t>(n));
  double norm_value = 0.0;  // sum of group maxima
  for (Index j = 0; j < n; ++j) {
    auto& g = groups[static_cast<size_t>(j)];
    g.sorted_abs.resize(static_cast<size_t>(m));
    for (Index i = 0; i < m; ++i) {
      g.sorted_abs[static_cast<size_t>(i)] = std::abs(v[j * m + i]);
    }
    std::sort(g.sorted_abs.begin(), g.sorted_abs.end(), std::greater<double>());
    g.prefix.resize(static_cast<size_t>(m) + 1);
    g.prefix[0] = 0.0;
    for (Index k = 0; k < m; ++k) {
      g.prefix[static_cast<size_t>(k) + 1] =
          g.prefix[static_cast<size_t>(k)] + g.sorted_abs[static_cast<size_t>(k)];
    }
    g.total = g.prefix.back();
    norm_value += g.sorted_abs.front();
  }
  if (norm_value <= tau) return v;  // already inside the ball

  // Sum of clip levels as a function of theta is piecewise linear and
  // decreasing; gather every breakpoint, bisect to the segment containing
  // the root of sum(theta) = tau, then solve that segment in closed form.
  std::vector<double> breaks;
  breaks.reserve(static_cast<size_t>(m * n) + 1);
  breaks.push_back(0.0);
  for (const auto& g : groups) {
    const Index count = static_cast<Index>(g.sorted_abs.size());
    for (Index k = 1; k <= count; ++k) {
      double next = k < count ? g.sorted_abs[static_cast<size_t>(k)] : 0.0;
      breaks.push_back(g.prefix[static_cast<size_t>(k)] -
                       static_cast<double>(k) * next);
    }
  }
  std::sort(breaks.begin(), breaks.end());

  auto level_sum = [&groups](double theta) {
    double s = 0.0;
    for (const auto& g : groups) s += g.level_at(theta);
    return s;
  };

  // First breakpoint where the level sum has dropped to tau or below.
  size_t lo = 0, hi = breaks.size() - 1;
  while (lo < hi) {
    size_t mid = lo + (hi - lo) / 2;
    if (level_sum(breaks[mid]) <= tau) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  double theta_hi = breaks[lo];
  double theta_lo = lo > 0 ? breaks[lo - 1] : 0.0;

  // Inside (theta_lo, theta_hi) every group keeps one linear segment:
  // sum(theta) = sum_j (prefix[k_j] - theta) / k_j over active groups.
  double theta_mid = 0.5 * (theta_lo + theta_hi);
  double intercept = 0.0;
  double slope = 0.0;
  for (const auto& g : groups) {
    Index k = g.segment_at(theta_mid);
    if (k == 0) continue;
    intercept += g.prefix[static_cast<size_t>(k)] / static_cast<double>(k);
    slope += 1.0 / static_cast<double>(k);
  }
  double theta = slope > 0.0 ? (intercept - tau) / slope : theta_hi;
  theta = std::clamp(theta, theta_lo, theta_hi);

  Vec out(v.size());
  for (Index j = 0; j < n; ++j) {
    double level = groups[static_cast<size_t>(j)].level_at(theta);
    for (Index i = 0; i < m; ++i) {
      double x = v[j * m + i];
      out[j * m + i] = std::clamp(x, -level, level);
    }
  }
  return out;
}

Vec prox_linf_l1(const Vec& v, const GroupLayout& layout, double tau) {
  return v - project_l1_linf_ball(v, layout, tau);
}

Vec prox_f2(const Vec& v, const Vec& b, double rho) {
  if (v.size() != b.size()) {
    throw std::invalid_argument("prox_f2: v and b must have equal lengths");
  }
  if (!(rho > 0.0)) throw std::invalid_argument("prox_f2: rho must be positive");
  return ((v + rho * b) / (1.0 + rho)).cwiseMax(0.0);
}

}  // namespace infpush
