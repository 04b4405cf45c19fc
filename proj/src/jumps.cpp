#include "fsb/jumps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "fsb/bessel.hpp"
#include "fsb/errors.hpp"

namespace fsb {

namespace {

constexpr std::size_t kNeighbours = 6;
constexpr double kMedianFactor = 5.0;
constexpr int kMaxPasses = 8;

double median_of(std::vector<double> v) {
    if (v.empty()) return 0.0;
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
    double m = v[mid];
    if (v.size() % 2 == 0) {
        m = 0.5 * (m + *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid)));
    }
    return m;
}

// Median of the closest unflagged gaps around i, walking outwards.
double local_median(const std::vector<double>& gaps, const std::vector<char>& flagged, std::size_t i) {
    std::vector<double> picked;
    const auto n = static_cast<std::ptrdiff_t>(gaps.size());
    const auto c = static_cast<std::ptrdiff_t>(i);
    for (std::ptrdiff_t d = 1; d < n && picked.size() < kNeighbours; ++d) {
        for (std::ptrdiff_t k : {c - d, c + d}) {
            if (k < 0 || k >= n || picked.size() >= kNeighbours) continue;
            if (!flagged[static_cast<std::size_t>(k)]) picked.push_back(gaps[static_cast<std::size_t>(k)]);
        }
    }
    return median_of(std::move(picked));
}

void annotate(JumpRecord& rec, double scale) {
    const double z = rec.location / scale;
    int best = 1;
    double best_root = bessel_root(1);
    for (int k = 2; k < 200; ++k) {
        const double r = bessel_root(k);
        if (std::abs(r - z) < std::abs(best_root - z)) {
            best = k;
            best_root = r;
        }
        if (r > z + 4.0) break;
    }
    rec.root_index = best;
    rec.nearest_root = best_root * scale;
    rec.relative_distance = std::abs(rec.location - rec.nearest_root) / std::abs(rec.nearest_root);
}

} // namespace

std::vector<JumpRecord> detect_jumps(const std::vector<double>& x, const std::vector<double>& y,
                                     double threshold, const std::string& observable,
                                     std::optional<double> root_scale) {
    if (x.size() != y.size()) throw DomainError("detect_jumps: x and y differ in length");
    if (x.size() < 8) throw DomainError("detect_jumps needs at least 8 points");
    if (!std::is_sorted(x.begin(), x.end())) throw DomainError("detect_jumps: x is not ascending");
    for (double v : y) {
        if (!std::isfinite(v)) throw DomainError("detect_jumps: non-finite sample");
    }

    std::vector<double> gaps(x.size() - 1);
    for (std::size_t i = 0; i + 1 < x.size(); ++i) gaps[i] = std::abs(y[i + 1] - y[i]);

    std::vector<char> flagged(gaps.size(), 0);
    for (int pass = 0; pass < kMaxPasses; ++pass) {
        std::vector<char> next(gaps.size(), 0);
        for (std::size_t i = 0; i < gaps.size(); ++i) {
            next[i] = gaps[i] > threshold + kMedianFactor * local_median(gaps, flagged, i);
        }
        if (next == flagged) break;
        flagged = std::move(next);
    }

    std::vector<JumpRecord> out;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        if (!flagged[i]) continue;
        JumpRecord rec;
        rec.observable = observable;
        rec.index = i;
        rec.location = 0.5 * (x[i] + x[i + 1]);
        rec.left_value = y[i];
        rec.right_value = y[i + 1];
        rec.magnitude = std::abs(y[i + 1] - y[i]);
        if (root_scale && *root_scale != 0.0) annotate(rec, *root_scale);
        out.push_back(rec);
    }
    return out;
}

} // namespace fsb
