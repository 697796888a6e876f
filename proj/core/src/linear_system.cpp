#include "jetcoh/linear_system.hpp"

#include "jetcoh/error.hpp"

#include <algorithm>

namespace jetcoh {

namespace {

using Row = std::vector<SparseLinearSystem::Entry>;

// a - s*b, both sorted
Row axpy(const Row& a, const Rational& s, const Row& b) {
    Row out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -s * b[j].second);
            ++j;
        } else {
            Rational v = a[i].second - s * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

SparseLinearSystem::SparseLinearSystem(std::size_t unknowns) : n_(unknowns), pivots_(unknowns) {}

void SparseLinearSystem::add_equation(std::vector<Entry> row, const Rational& rhs) {
    ++equations_;
    for (const auto& [c, _] : row)
        if (c >= n_) throw InvalidArgument("equation refers to an unknown out of range");
    std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    Row r;
    for (auto& e : row) {
        if (!r.empty() && r.back().first == e.first) {
            r.back().second += e.second;
            if (r.back().second == 0) r.pop_back();
        } else if (e.second != 0) {
            r.push_back(std::move(e));
        }
    }
    if (rhs != 0) r.emplace_back(n_, rhs);

    while (!r.empty()) {
        const std::size_t c = r.front().first;
        if (c == n_) {
            inconsistent_ = true;
            return;
        }
        if (pivots_[c].empty()) {
            const Rational lead = r.front().second;
            for (auto& e : r) e.second /= lead;
            pivots_[c] = std::move(r);
            ++rank_;
            return;
        }
        r = axpy(r, r.front().second, pivots_[c]);
    }
}

LinearSolution SparseLinearSystem::solve() const {
    LinearSolution sol;
    sol.consistent = !inconsistent_;
    sol.rank = rank_;
    for (std::size_t c = 0; c < n_; ++c)
        if (pivots_[c].empty()) sol.free_columns.push_back(c);
    if (inconsistent_) return sol;

    // back substitution with a given assignment of the free columns
    auto back = [&](std::vector<Rational>& x, bool homogeneous) {
        for (std::size_t c = n_; c-- > 0;) {
            const Row& p = pivots_[c];
            if (p.empty()) continue;
            Rational v(0);
            for (std::size_t i = 1; i < p.size(); ++i) {
                const auto& [col, a] = p[i];
                if (col == n_) {
                    if (!homogeneous) v += a;
                } else if (x[col] != 0) {
                    v -= a * x[col];
                }
            }
            x[c] = v;
        }
    };

    sol.particular.assign(n_, Rational(0));
    back(sol.particular, false);
    for (std::size_t f : sol.free_columns) {
        std::vector<Rational> x(n_, Rational(0));
        x[f] = 1;
        back(x, true);
        sol.nullspace.push_back(std::move(x));
    }
    return sol;
}

}  // namespace jetcoh
