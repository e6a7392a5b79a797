#include "facs/shapes.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace facs {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        require(parts_[i] >= 1, Errc::Usage, "partition parts must be positive");
        require(i == 0 || parts_[i - 1] >= parts_[i], Errc::Usage,
                "partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

bool Partition::has_cell(int row, int col) const {
    return row >= 1 && col >= 1 && col <= part(row);
}

std::optional<Partition> Partition::with_cell_at(int row) const {
    if (row < 1 || row > length() + 1) return std::nullopt;
    if (part(row) + 1 > part(row - 1) && row != 1) return std::nullopt;
    std::vector<int> parts = parts_;
    if (row == length() + 1)
        parts.push_back(1);
    else
        parts[row - 1] += 1;
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition Partition::parse(const std::string& text) {
    std::string body = text;
    body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == ' '; }),
               body.end());
    if (body.empty() || body == "0") return Partition();
    std::vector<int> parts;
    std::stringstream in(body);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        try {
            parts.push_back(std::stoi(piece));
        } catch (const std::logic_error&) {
            fail(Errc::Usage, "bad partition '" + text + "'");
        }
    }
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return Partition();
    std::vector<int> cols(lambda.part(1), 0);
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) cols[j - 1] += 1;
    return Partition(std::move(cols));
}

bool contains(const Partition& mu, const Partition& nu) {
    for (int i = 1; i <= mu.length(); ++i)
        if (mu.part(i) > nu.part(i)) return false;
    return true;
}

Partition join(const Partition& l, const Partition& r) {
    std::vector<int> parts;
    for (int i = 1; i <= std::max(l.length(), r.length()); ++i)
        parts.push_back(std::max(l.part(i), r.part(i)));
    return Partition(std::move(parts));
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    require(contains(inner_, outer_), Errc::NotContained,
            "skew shape needs inner inside outer: " + inner_.to_string() + " vs " +
                outer_.to_string());
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= outer_.length(); ++i)
        for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j) out.push_back({i, j});
    return out;
}

std::string SkewShape::to_string() const {
    if (inner_.empty()) return outer_.to_string();
    return outer_.to_string() + "/" + inner_.to_string();
}

SkewShape SkewShape::parse(const std::string& text) {
    std::size_t slash = text.find('/');
    if (slash == std::string::npos) return SkewShape(Partition::parse(text));
    return SkewShape(Partition::parse(text.substr(0, slash)),
                     Partition::parse(text.substr(slash + 1)));
}

std::vector<std::pair<Partition, int>> covers_above(const Partition& rho, const Partition* bound) {
    std::vector<std::pair<Partition, int>> out;
    for (int row = 1; row <= rho.length() + 1; ++row) {
        std::optional<Partition> sigma = rho.with_cell_at(row);
        if (!sigma) continue;
        if (bound && !contains(*sigma, *bound)) continue;
        out.emplace_back(std::move(*sigma), row);
    }
    return out;
}

std::vector<std::pair<Partition, int>> covers_below(const Partition& nu) {
    std::vector<std::pair<Partition, int>> out;
    for (int row = 1; row <= nu.length(); ++row) {
        if (nu.part(row) == nu.part(row + 1)) continue; // not a removable corner
        std::vector<int> parts = nu.parts();
        parts[row - 1] -= 1;
        out.emplace_back(Partition(std::move(parts)), row);
    }
    return out;
}

ShapeChain::ShapeChain(Partition start) : diagrams_{std::move(start)} {}

ShapeChain::ShapeChain(std::vector<Partition> diagrams, std::vector<int> yamanouchi)
    : diagrams_(std::move(diagrams)), yamanouchi_(std::move(yamanouchi)) {
    require(!diagrams_.empty() && diagrams_.size() == yamanouchi_.size() + 1, Errc::SizeMismatch,
            "chain needs one more diagram than steps");
    for (std::size_t i = 0; i < yamanouchi_.size(); ++i) {
        std::optional<Partition> next = diagrams_[i].with_cell_at(yamanouchi_[i]);
        require(next && *next == diagrams_[i + 1], Errc::Usage,
                "chain step " + std::to_string(i + 1) + " is not a single-cell cover");
    }
}

std::optional<ShapeChain> ShapeChain::from_yamanouchi(const Partition& mu,
                                                      const std::vector<int>& word) {
    std::vector<Partition> diagrams{mu};
    for (int row : word) {
        std::optional<Partition> next = diagrams.back().with_cell_at(row);
        if (!next) return std::nullopt;
        diagrams.push_back(std::move(*next));
    }
    return ShapeChain(std::move(diagrams), word);
}

std::vector<ShapeChain> chains(const Partition& mu, const Partition& nu) {
    std::vector<ShapeChain> out;
    for_each_chain(mu, nu, [&](const ShapeChain& chain) { out.push_back(chain); });
    return out;
}

long long hook_product(const Partition& lambda) {
    Partition t = conjugate(lambda);
    long long product = 1;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            product *= lambda.part(i) - j + t.part(j) - i + 1;
    return product;
}

namespace {

// Chain counts are shared across calls; the cache only grows.
std::map<std::pair<std::vector<int>, std::vector<int>>, long long> dim_cache;
std::mutex dim_cache_mutex;

long long dim_skew_uncached(const Partition& inner, const Partition& outer);

long long dim_skew_cached(const Partition& inner, const Partition& outer) {
    std::pair<std::vector<int>, std::vector<int>> key{inner.parts(), outer.parts()};
    {
        std::lock_guard<std::mutex> lock(dim_cache_mutex);
        auto it = dim_cache.find(key);
        if (it != dim_cache.end()) return it->second;
    }
    long long value = dim_skew_uncached(inner, outer);
    std::lock_guard<std::mutex> lock(dim_cache_mutex);
    dim_cache.emplace(std::move(key), value);
    return value;
}

long long dim_skew_uncached(const Partition& inner, const Partition& outer) {
    if (inner == outer) return 1;
    long long total = 0;
    for (const auto& [next, row] : covers_above(inner, &outer))
        total += dim_skew_cached(next, outer);
    return total;
}

} // namespace

long long dim_skew(const SkewShape& shape) {
    return dim_skew_cached(shape.inner(), shape.outer());
}

Rational h_skew(const SkewShape& shape) {
    Rational factorial = rat(1);
    for (int i = 2; i <= shape.size(); ++i) factorial *= rat(i);
    return factorial / rat(dim_skew(shape));
}

std::vector<VarRef> a_rho_point(const Partition& rho, int n) {
    require(rho.length() <= n, Errc::TooLong,
            "partition " + rho.to_string() + " has more than n=" + std::to_string(n) + " rows");
    std::vector<VarRef> out;
    for (int k = 1; k <= n; ++k) out.push_back(a_var(rho.part(k) + n - k + 1));
    return out;
}

MultiPoly a_weight(const Partition& rho, int n) {
    MultiPoly out;
    for (VarRef v : a_rho_point(rho, n)) out += MultiPoly::variable(v);
    return out;
}

namespace {

void grow_in_box(std::vector<int>& parts, int rows, int max_part,
                 std::vector<Partition>& out) {
    out.push_back(Partition(parts));
    if (static_cast<int>(parts.size()) == rows) return;
    for (int next = 1; next <= max_part; ++next) {
        parts.push_back(next);
        grow_in_box(parts, rows, next, out);
        parts.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<int> parts;
    std::vector<Partition> out;
    grow_in_box(parts, rows, cols, out);
    return out;
}

std::vector<Partition> partitions_between(const Partition& lo, const Partition& hi) {
    require(contains(lo, hi), Errc::NotContained, "interval endpoints out of order");
    std::vector<Partition> out;
    std::vector<int> parts;
    auto walk = [&](auto&& self, int row) -> void {
        if (row > hi.length()) {
            out.push_back(Partition(parts));
            return;
        }
        int upper = std::min(hi.part(row), row == 1 ? hi.part(1) : parts[row - 2]);
        for (int value = lo.part(row); value <= upper; ++value) {
            if (value == 0) {
                // Remaining rows are forced empty too.
                self(self, hi.length() + 1);
            } else {
                parts.push_back(value);
                self(self, row + 1);
                parts.pop_back();
            }
        }
    };
    walk(walk, 1);
    return out;
}

} // namespace facs
