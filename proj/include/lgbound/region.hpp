#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace lgbound {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool operator==(const Interval&) const = default;
};

/// A finite union of disjoint intervals of the real line; endpoints may be
/// infinite. Defines the "+" outcome of a dichotomic coarse-graining.
/// Stored sorted, with overlapping or touching pieces merged and empty
/// pieces dropped, so equal sets compare equal.
class Region {
public:
    Region() = default;

    explicit Region(std::vector<Interval> pieces) {
        for (const auto& p : pieces) {
            if (std::isnan(p.lo) || std::isnan(p.hi))
                throw std::invalid_argument("Region: NaN endpoint");
            if (p.lo > p.hi)
                throw std::invalid_argument("Region: interval lower bound exceeds upper bound");
        }
        std::erase_if(pieces, [](const Interval& p) { return p.lo == p.hi; });
        std::sort(pieces.begin(), pieces.end(),
                  [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
        for (const auto& p : pieces) {
            if (!intervals_.empty() && p.lo <= intervals_.back().hi)
                intervals_.back().hi = std::max(intervals_.back().hi, p.hi);
            else
                intervals_.push_back(p);
        }
    }

    static Region interval(double lo, double hi) { return Region({{lo, hi}}); }
    static Region whole_line() { return interval(-kInf, kInf); }
    static Region positive_half() { return interval(0.0, kInf); }
    static Region negative_half() { return interval(-kInf, 0.0); }

    const std::vector<Interval>& intervals() const { return intervals_; }
    bool empty() const { return intervals_.empty(); }

    bool contains(double x) const {
        return std::any_of(intervals_.begin(), intervals_.end(),
                           [x](const Interval& p) { return x >= p.lo && x <= p.hi; });
    }

    Region complement() const {
        std::vector<Interval> out;
        double cursor = -kInf;
        for (const auto& p : intervals_) {
            if (p.lo > cursor) out.push_back({cursor, p.lo});
            cursor = p.hi;
        }
        if (cursor < kInf) out.push_back({cursor, kInf});
        return Region(std::move(out));
    }

    /// Length of the part of the region inside [lo, hi].
    double measure_within(double lo, double hi) const {
        double total = 0.0;
        for (const auto& p : intervals_) total += std::max(0.0, std::min(p.hi, hi) - std::max(p.lo, lo));
        return total;
    }

    bool operator==(const Region&) const = default;

    std::string to_string() const {
        if (intervals_.empty()) return "{}";
        std::string out;
        auto fmt = [](double v) {
            if (v == kInf) return std::string("inf");
            if (v == -kInf) return std::string("-inf");
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.15g", v);
            return std::string(buf);
        };
        for (const auto& p : intervals_) {
            if (!out.empty()) out += " U ";
            out += "[" + fmt(p.lo) + ", " + fmt(p.hi) + "]";
        }
        return out;
    }

private:
    std::vector<Interval> intervals_;
};

}  // namespace lgbound
