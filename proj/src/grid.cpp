#include "hyperpath/grid.hpp"

#include "hyperpath/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace hyperpath {

long GridPoint::norm() const noexcept {
    return std::accumulate(coords_.begin(), coords_.end(), 0L);
}

GridBox::GridBox(int n, int d) : GridBox(std::vector<int>(d > 0 ? static_cast<std::size_t>(d) : 0, n)) {
    if (d < 1) throw InputError("grid dimension must be at least 1");
}

GridBox::GridBox(std::vector<int> extents) : extents_(std::move(extents)) {
    if (extents_.empty()) throw InputError("grid dimension must be at least 1");
    strides_.assign(extents_.size(), 1);
    for (std::size_t t = extents_.size(); t-- > 0;) {
        if (extents_[t] < 1) throw InputError("grid extents must be positive");
        strides_[t] = size_;
        if (size_ > std::numeric_limits<std::size_t>::max() / 4 / static_cast<std::size_t>(extents_[t]))
            throw InputError("grid box too large");
        size_ *= static_cast<std::size_t>(extents_[t]);
    }
}

bool GridBox::is_cube() const noexcept {
    return std::all_of(extents_.begin(), extents_.end(), [&](int e) { return e == extents_.front(); });
}

bool GridBox::contains(const GridPoint& x) const noexcept {
    if (x.dimension() != dimension()) return false;
    for (std::size_t t = 0; t < dimension(); ++t)
        if (x[t] < 1 || x[t] > extents_[t]) return false;
    return true;
}

std::size_t GridBox::index_of(const GridPoint& x) const {
    if (!contains(x)) throw InputError("point outside the grid box");
    std::size_t idx = 0;
    for (std::size_t t = 0; t < dimension(); ++t)
        idx += static_cast<std::size_t>(x[t] - 1) * strides_[t];
    return idx;
}

GridPoint GridBox::point_at(std::size_t index) const {
    if (index >= size_) throw InputError("cell index outside the grid box");
    std::vector<int> c(dimension());
    for (std::size_t t = 0; t < dimension(); ++t) {
        c[t] = static_cast<int>(index / strides_[t]) + 1;
        index %= strides_[t];
    }
    return GridPoint(std::move(c));
}

bool dominates(const GridPoint& x, const GridPoint& y) {
    if (x.dimension() != y.dimension())
        throw InputError("dominates: dimension mismatch");
    for (std::size_t i = 0; i < x.dimension(); ++i)
        if (x[i] > y[i]) return false;
    return true;
}

namespace {

// Every member's lower covers are members, hence the set is down-closed.
void require_down_closed(const GridBox& box, const Bitset& mask) {
    for (auto i = mask.find_first(); i != Bitset::npos; i = mask.find_next(i)) {
        const GridPoint p = box.point_at(i);
        for (std::size_t t = 0; t < box.dimension(); ++t)
            if (p[t] > 1 && !mask.test(i - box.stride(t)))
                throw InvariantError("set is not closed downward");
    }
}

}  // namespace

DownSet::DownSet(GridBox box, std::span<const GridPoint> members) : box_(std::move(box)), mask_(box_.size()) {
    for (const auto& m : members) {
        if (!box_.contains(m)) throw InputError("down-set member outside the box");
        mask_.set(box_.index_of(m));
    }
    require_down_closed(box_, mask_);
}

DownSet::DownSet(GridBox box, Bitset mask) : box_(std::move(box)), mask_(std::move(mask)) {
    if (mask_.size() != box_.size()) throw InputError("down-set mask size does not match the box");
    require_down_closed(box_, mask_);
}

std::vector<GridPoint> DownSet::members() const {
    std::vector<GridPoint> out;
    for (auto i = mask_.find_first(); i != Bitset::npos; i = mask_.find_next(i)) out.push_back(box_.point_at(i));
    return out;
}

Antichain::Antichain(GridBox box, std::span<const GridPoint> members)
    : box_(std::move(box)), members_(members.begin(), members.end()) {
    for (const auto& m : members_)
        if (!box_.contains(m)) throw InputError("antichain member outside the box");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (std::size_t i = 0; i < members_.size(); ++i)
        for (std::size_t j = i + 1; j < members_.size(); ++j)
            if (dominates(members_[i], members_[j]))
                throw InvariantError("antichain has comparable members");
}

HyperPartition::HyperPartition(GridBox ambient, std::vector<int> entries)
    : ambient_(std::move(ambient)), entries_(std::move(entries)) {
    const std::size_t d = ambient_.dimension();
    const std::size_t cells = ambient_.size() / static_cast<std::size_t>(bound());
    if (entries_.size() != cells) throw InputError("partition has the wrong number of entries");
    // Strides of the index box are those of the ambient box divided by n_d.
    const auto nd = static_cast<std::size_t>(bound());
    for (std::size_t c = 0; c < cells; ++c) {
        if (entries_[c] < 0 || entries_[c] > bound()) throw InvariantError("partition entry out of range");
        std::size_t rest = c;
        for (std::size_t t = 0; t + 1 < d; ++t) {
            const std::size_t s = ambient_.stride(t) / nd;
            const std::size_t coord = rest / s;
            rest %= s;
            if (coord > 0 && entries_[c - s] < entries_[c])
                throw InvariantError("partition is not decreasing along every axis");
        }
    }
}

std::vector<int> HyperPartition::index_extents() const {
    const auto& e = ambient_.extents();
    return {e.begin(), e.end() - 1};
}

std::vector<int> HyperPartition::index_of_cell(std::size_t flat) const {
    const std::size_t d = ambient_.dimension();
    const auto nd = static_cast<std::size_t>(bound());
    std::vector<int> idx(d - 1);
    for (std::size_t t = 0; t + 1 < d; ++t) {
        const std::size_t s = ambient_.stride(t) / nd;
        idx[t] = static_cast<int>(flat / s) + 1;
        flat %= s;
    }
    return idx;
}

int HyperPartition::at(std::span<const int> index) const {
    const std::size_t d = ambient_.dimension();
    if (index.size() + 1 != d) throw InputError("partition index has the wrong dimension");
    const auto nd = static_cast<std::size_t>(bound());
    std::size_t flat = 0;
    for (std::size_t t = 0; t + 1 < d; ++t) {
        if (index[t] < 1 || index[t] > ambient_.extent(t)) throw InputError("partition index out of range");
        flat += static_cast<std::size_t>(index[t] - 1) * (ambient_.stride(t) / nd);
    }
    return entries_[flat];
}

// A_{i} = max{s : (i, s) in S}. Cells with fixed leading index are
// contiguous in the box order, column heights are read off directly.
HyperPartition downset_to_partition(const DownSet& s) {
    const GridBox& box = s.box();
    const auto nd = static_cast<std::size_t>(box.extents().back());
    std::vector<int> entries(box.size() / nd, 0);
    for (std::size_t c = 0; c < entries.size(); ++c) {
        int h = 0;
        while (h < static_cast<int>(nd) && s.mask().test(c * nd + static_cast<std::size_t>(h))) ++h;
        entries[c] = h;
    }
    return HyperPartition(box, std::move(entries));
}

DownSet partition_to_downset(const HyperPartition& a) {
    const GridBox& box = a.ambient();
    const auto nd = static_cast<std::size_t>(a.bound());
    Bitset mask(box.size());
    for (std::size_t c = 0; c < a.cells(); ++c)
        for (int h = 0; h < a.at(c); ++h) mask.set(c * nd + static_cast<std::size_t>(h));
    return DownSet(box, std::move(mask));
}

Antichain maximal_elements(const DownSet& s) {
    const GridBox& box = s.box();
    std::vector<GridPoint> top;
    const Bitset& m = s.mask();
    for (auto i = m.find_first(); i != Bitset::npos; i = m.find_next(i)) {
        const GridPoint p = box.point_at(i);
        bool maximal = true;
        for (std::size_t t = 0; t < box.dimension() && maximal; ++t)
            if (p[t] < box.extent(t) && m.test(i + box.stride(t))) maximal = false;
        if (maximal) top.push_back(p);
    }
    return Antichain(box, top);
}

DownSet downset_closure(const Antichain& a) {
    const GridBox& box = a.box();
    Bitset mask(box.size());
    // Cells in decreasing index order: a cell is in the closure iff it is a
    // generator or one of its upper covers is in the closure.
    for (const auto& g : a.members()) mask.set(box.index_of(g));
    for (std::size_t i = box.size(); i-- > 0;) {
        if (mask.test(i)) continue;
        const GridPoint p = box.point_at(i);
        for (std::size_t t = 0; t < box.dimension(); ++t) {
            if (p[t] < box.extent(t) && mask.test(i + box.stride(t))) {
                mask.set(i);
                break;
            }
        }
    }
    return DownSet(box, std::move(mask));
}

std::optional<std::size_t> first_difference(const HyperPartition& a, const HyperPartition& b) {
    if (!(a.ambient() == b.ambient())) throw InputError("partitions over different boxes");
    for (std::size_t c = 0; c < a.cells(); ++c)
        if (a.at(c) != b.at(c)) return c;
    return std::nullopt;
}

std::strong_ordering lex_compare(const HyperPartition& a, const HyperPartition& b) {
    const auto c = first_difference(a, b);
    if (!c) return std::strong_ordering::equal;
    return a.at(*c) <=> b.at(*c);
}

std::vector<HyperPartition> all_partitions(const GridBox& ambient, std::size_t max_count) {
    const std::size_t d = ambient.dimension();
    const int bound = ambient.extents().back();
    const std::size_t cells = ambient.size() / static_cast<std::size_t>(bound);
    std::vector<std::size_t> strides(d - 1);
    for (std::size_t t = 0; t + 1 < d; ++t) strides[t] = ambient.stride(t) / static_cast<std::size_t>(bound);

    std::vector<HyperPartition> out;
    std::vector<int> cur(cells, 0);
    auto upper_of = [&](std::size_t c) {
        int u = bound;
        std::size_t rest = c;
        for (std::size_t t = 0; t + 1 < d; ++t) {
            const std::size_t coord = rest / strides[t];
            rest %= strides[t];
            if (coord > 0) u = std::min(u, cur[c - strides[t]]);
        }
        return u;
    };
    auto rec = [&](auto&& self, std::size_t c) -> void {
        if (c == cells) {
            if (out.size() >= max_count) throw BudgetExceeded("partition enumeration exceeds the work budget");
            out.emplace_back(ambient, cur);
            return;
        }
        const int u = upper_of(c);
        for (int v = 0; v <= u; ++v) {
            cur[c] = v;
            self(self, c + 1);
        }
        cur[c] = 0;
    };
    rec(rec, 0);
    return out;
}

}  // namespace hyperpath
