#include "sgi/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>

namespace sgi {

int node_count(int level) {
    if (level < 1)
        throw invalid_argument("node_count: level must be >= 1");
    if (level == 1) return 1;
    return (1 << (level - 1)) + 1;
}

std::vector<DyadicNode> nodes_1d(int level) {
    if (level < 1)
        throw invalid_argument("nodes_1d: level must be >= 1");
    if (level == 1)
        return {DyadicNode::from_fraction(1, 2)};
    const std::uint64_t den = std::uint64_t{1} << (level - 1);
    std::vector<DyadicNode> nodes;
    nodes.reserve(den + 1);
    // descending t = ascending position
    for (std::uint64_t j = den + 1; j-- > 0;)
        nodes.push_back(DyadicNode::from_fraction(j, den));
    return nodes;
}

namespace {

void enumerate_indices(int dimension, int budget, std::vector<int>& prefix,
                       std::vector<MultiIndex>& out) {
    if (static_cast<int>(prefix.size()) == dimension) {
        out.emplace_back(prefix);
        return;
    }
    for (int i = 1; i - 1 <= budget; ++i) {
        prefix.push_back(i);
        enumerate_indices(dimension, budget - (i - 1), prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<MultiIndex> total_degree_index_set(int dimension, int level) {
    if (dimension < 1)
        throw invalid_argument("total_degree_index_set: dimension must be >= 1");
    if (level < 0)
        throw invalid_argument("total_degree_index_set: level must be >= 0");
    std::vector<MultiIndex> out;
    std::vector<int> prefix;
    enumerate_indices(dimension, level, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::map<MultiIndex, int> combination_coefficients(const std::vector<MultiIndex>& index_set) {
    if (index_set.empty())
        throw invalid_argument("combination_coefficients: empty index set");
    const int d = index_set.front().dimension();
    std::set<MultiIndex> members(index_set.begin(), index_set.end());
    for (const auto& idx : index_set) {
        if (idx.dimension() != d)
            throw invalid_argument("combination_coefficients: mixed dimensions in index set");
        // downward closure: every index with one entry lowered must be present
        for (int k = 0; k < d; ++k) {
            if (idx[k] == 1) continue;
            std::vector<int> lowered = idx.entries();
            --lowered[k];
            if (!members.count(MultiIndex(lowered)))
                throw invalid_argument("combination_coefficients: index set is not downward closed");
        }
    }

    std::map<MultiIndex, int> coeffs;
    for (const auto& idx : index_set) {
        int c = 0;
        for (std::uint32_t z = 0; z < (1u << d); ++z) {
            std::vector<int> shifted = idx.entries();
            int parity = 0;
            for (int k = 0; k < d; ++k) {
                if (z & (1u << k)) {
                    ++shifted[k];
                    ++parity;
                }
            }
            if (members.count(MultiIndex(shifted)))
                c += (parity % 2 == 0) ? 1 : -1;
        }
        if (c != 0)
            coeffs.emplace(idx, c);
    }
    return coeffs;
}

namespace {

void enumerate_tensor_points(const MultiIndex& index, const Domain& domain,
                             std::map<PointId, std::vector<double>>& points) {
    const int d = index.dimension();
    std::vector<std::vector<DyadicNode>> axes(d);
    for (int k = 0; k < d; ++k)
        axes[k] = nodes_1d(index[k]);

    PointId id(d);
    std::vector<double> coords(d);
    auto rec = [&](auto&& self, int k) -> void {
        if (k == d) {
            points.emplace(id, coords);
            return;
        }
        for (const auto& node : axes[k]) {
            id[k] = node;
            coords[k] = domain.from_reference(k, node.reference_value());
            self(self, k + 1);
        }
    };
    rec(rec, 0);
}

} // namespace

SparseGrid::SparseGrid(int dimension, int level, Domain domain)
    : dimension_(dimension), level_(level), domain_(std::move(domain)) {
    if (dimension < 1)
        throw invalid_argument("SparseGrid: dimension must be >= 1");
    if (level < 0)
        throw invalid_argument("SparseGrid: level must be >= 0");
    if (domain_.dimension() != dimension)
        throw invalid_argument("SparseGrid: domain dimension mismatch");

    terms_ = combination_coefficients(total_degree_index_set(dimension, level));

    std::map<PointId, std::vector<double>> unique;
    for (const auto& [index, coeff] : terms_)
        enumerate_tensor_points(index, domain_, unique);

    points_.reserve(unique.size());
    for (auto& [id, coords] : unique) {
        index_.emplace(id, points_.size());
        points_.push_back(GridPoint{id, std::move(coords)});
    }
}

const GridPoint* SparseGrid::find(const PointId& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return nullptr;
    return &points_[it->second];
}

std::string format_point_id(const PointId& id) {
    std::string out;
    for (std::size_t k = 0; k < id.size(); ++k) {
        if (k) out += ';';
        out += std::to_string(id[k].numerator());
        out += '/';
        out += std::to_string(id[k].denominator());
    }
    return out;
}

namespace {

std::uint64_t parse_u64(std::string_view text, const std::string& context) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw invalid_argument("parse_point_id: bad integer in '" + context + "'");
    return value;
}

} // namespace

PointId parse_point_id(const std::string& text) {
    PointId id;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t semi = text.find(';', pos);
        const std::string_view part(text.data() + pos,
                                    (semi == std::string::npos ? text.size() : semi) - pos);
        const std::size_t slash = part.find('/');
        if (part.empty() || slash == std::string_view::npos)
            throw invalid_argument("parse_point_id: expected num/den in '" + text + "'");
        const std::uint64_t num = parse_u64(part.substr(0, slash), text);
        const std::uint64_t den = parse_u64(part.substr(slash + 1), text);
        id.push_back(DyadicNode::from_fraction(num, den));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    if (id.empty())
        throw invalid_argument("parse_point_id: empty id");
    return id;
}

} // namespace sgi
