#include "vcdim/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace vcdim {

Point Point::continuous(std::vector<double> coordinates) {
    if (coordinates.empty())
        throw ContractViolation("continuous point needs at least one coordinate");
    for (double c : coordinates)
        if (!std::isfinite(c))
            throw ContractViolation("point coordinates must be finite");
    return Point(std::move(coordinates));
}

Point Point::finite(std::size_t index) { return Point(index); }

std::size_t Point::dimension() const {
    if (auto* c = std::get_if<Coords>(&value_))
        return c->size();
    return 0;
}

std::span<const double> Point::coordinates() const {
    if (auto* c = std::get_if<Coords>(&value_))
        return *c;
    throw ContractViolation("finite-domain point has no coordinates");
}

std::size_t Point::index() const {
    if (auto* i = std::get_if<std::size_t>(&value_))
        return *i;
    throw ContractViolation("continuous point has no index");
}

std::string Point::to_string() const {
    std::ostringstream os;
    os.precision(17);
    if (is_finite()) {
        os << '#' << index();
        return os.str();
    }
    os << '(';
    auto c = coordinates();
    for (std::size_t i = 0; i < c.size(); ++i)
        os << (i ? "," : "") << c[i];
    os << ')';
    return os.str();
}

LabelVector::LabelVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_)
        if (b > 1)
            throw ContractViolation("label values must be 0 or 1");
}

LabelVector LabelVector::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char ch : text) {
        if (ch != '0' && ch != '1')
            throw ContractViolation("labeling must be a string of '0'/'1'");
        bits.push_back(std::uint8_t(ch - '0'));
    }
    return LabelVector(std::move(bits));
}

LabelVector LabelVector::from_index(std::size_t d, std::uint64_t index) {
    if (d == 0 || d > 62)
        throw ContractViolation("labeling length must be in [1, 62]");
    if (index >> d)
        throw ContractViolation("labeling index out of range");
    LabelVector v(d);
    for (std::size_t j = 0; j < d; ++j)
        v.bits_[j] = std::uint8_t((index >> (d - 1 - j)) & 1u);
    return v;
}

LabelVector LabelVector::complement() const {
    LabelVector v = *this;
    for (auto& b : v.bits_)
        b ^= 1u;
    return v;
}

std::size_t LabelVector::count_ones() const {
    return std::size_t(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::uint64_t LabelVector::to_index() const {
    if (bits_.size() > 62)
        throw ContractViolation("labeling too long to index");
    std::uint64_t idx = 0;
    for (auto b : bits_)
        idx = (idx << 1) | b;
    return idx;
}

std::string LabelVector::to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        s[i] = char('0' + bits_[i]);
    return s;
}

std::size_t hamming_distance(const LabelVector& a, const LabelVector& b) {
    if (a.size() != b.size())
        throw ContractViolation("label vectors differ in length");
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        n += a[i] != b[i];
    return n;
}

PointSet::PointSet(std::vector<Point> points) {
    if (points.empty())
        throw ContractViolation("point set must be nonempty");
    const bool continuous = points[0].is_continuous();
    const std::size_t dim = points[0].dimension();
    for (const auto& p : points) {
        if (p.is_continuous() != continuous)
            throw ContractViolation("point set mixes finite and continuous points");
        if (p.dimension() != dim)
            throw ContractViolation("points of a set must share one dimension");
    }
    // Sorting a copy of the positions keeps duplicate detection O(d log d).
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    auto less = [&](std::size_t a, std::size_t b) {
        const auto& pa = points[a];
        const auto& pb = points[b];
        if (!continuous)
            return pa.index() < pb.index();
        auto ca = pa.coordinates();
        auto cb = pb.coordinates();
        return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
    };
    std::sort(order.begin(), order.end(), less);
    for (std::size_t i = 1; i < order.size(); ++i)
        if (points[order[i - 1]] == points[order[i]])
            throw ContractViolation("duplicate point " + points[order[i]].to_string() +
                                    " in point set");
    points_ = std::make_shared<const std::vector<Point>>(std::move(points));
}

PointSet PointSet::subset(std::span<const std::size_t> positions) const {
    std::vector<Point> out;
    out.reserve(positions.size());
    for (auto i : positions)
        out.push_back(points_->at(i));
    return PointSet(std::move(out));
}

LabeledSample::LabeledSample(PointSet points, LabelVector labels)
    : points_(std::move(points)), labels_(std::move(labels)) {
    if (labels_.size() != points_.size())
        throw ContractViolation("labeling length " + std::to_string(labels_.size()) +
                                " does not match point count " +
                                std::to_string(points_.size()));
}

std::string Loss::to_string() const {
    return std::to_string(numerator) + "/" + std::to_string(denominator);
}

Loss empirical_loss(const LabelVector& predictions, const LabeledSample& sample) {
    if (predictions.size() != sample.size())
        throw ContractViolation("predictions length does not match sample size");
    return {hamming_distance(predictions, sample.labels()), sample.size()};
}

void certify_outcome(const ErmOutcome& outcome, const LabeledSample& sample) {
    if (outcome.sample_size != sample.size())
        throw OracleError("ERM outcome reports the wrong sample size");
    if (outcome.loss_numerator > outcome.sample_size)
        throw OracleError("ERM outcome loss exceeds sample size");
    if (outcome.predictions) {
        if (hamming_distance(*outcome.predictions, sample.labels()) != outcome.loss_numerator)
            throw OracleError("ERM outcome predictions disagree with its reported loss");
    } else if (outcome.loss_numerator == 0) {
        throw OracleError("zero-loss ERM outcome must carry predictions");
    }
}

} // namespace vcdim
