#pragma once

#include "zpstab/polygon.hpp"

#include <cstdint>
#include <vector>

namespace zpstab {

/// Edge-crossing counts of the three open components of line(x, y) \ {x, y}.
struct StabTriple {
    std::uint32_t tail = 0;
    std::uint32_t body = 0;
    std::uint32_t head = 0;

    friend constexpr bool operator==(const StabTriple&, const StabTriple&) = default;
};

/// Zero-parity class of a crossing count.
enum class ZP : std::uint8_t { Zero, Odd, EvenPos };

/// Pure-parity class; zero counts as even.
enum class PP : std::uint8_t { Even, Odd };

constexpr ZP zp(std::uint32_t c) { return c == 0 ? ZP::Zero : (c % 2 ? ZP::Odd : ZP::EvenPos); }
constexpr PP pp(std::uint32_t c) { return c % 2 ? PP::Odd : PP::Even; }
constexpr PP pp(ZP c) { return c == ZP::Odd ? PP::Odd : PP::Even; }
constexpr bool is_even(ZP c) { return c != ZP::Odd; }

const char* to_string(ZP c);
const char* to_string(PP c);
/// One-letter forms: z / o / e.
char letter(ZP c);

struct ZPTriple {
    ZP tail = ZP::Zero;
    ZP body = ZP::Zero;
    ZP head = ZP::Zero;
    friend constexpr bool operator==(const ZPTriple&, const ZPTriple&) = default;
};

struct PPTriple {
    PP tail = PP::Even;
    PP body = PP::Even;
    PP head = PP::Even;
    friend constexpr bool operator==(const PPTriple&, const PPTriple&) = default;
};

/// Dense table over ordered vertex pairs (x, y), x != y.
template <class T>
class PairTable {
public:
    PairTable() = default;
    explicit PairTable(std::size_t n) : n_(n), cells_(n * n) {}

    std::size_t size() const noexcept { return n_; }
    const T& at(std::size_t x, std::size_t y) const { return cells_[x * n_ + y]; }
    T& at(std::size_t x, std::size_t y) { return cells_[x * n_ + y]; }

    friend bool operator==(const PairTable&, const PairTable&) = default;

private:
    std::size_t n_ = 0;
    std::vector<T> cells_;
};

using StabTable = PairTable<StabTriple>;
using ZPTable = PairTable<ZPTriple>;
using PPTable = PairTable<PPTriple>;

/// Counts edges (excluding those incident to x or y) that properly cross
/// each open component of line(x, y).
StabTriple stab_triple(const Polygon& poly, std::size_t x, std::size_t y);
StabTable stab_table(const Polygon& poly);

ZPTriple zp_triple(const StabTriple& s);
PPTriple pp_triple(const StabTriple& s);
ZPTable zp_table(const StabTable& st);
PPTable pp_table(const StabTable& st);
PPTable pp_table(const ZPTable& zt);

/// Unordered pairs (x < y) whose body class is Zero: the visibility edges.
std::vector<VertexPair> visible_pairs(const ZPTable& zt);

/// 1 iff v's two boundary neighbours lie strictly on opposite sides of line(x, y).
int straddle(const Polygon& poly, std::size_t v, std::size_t x, std::size_t y);

/// tail + body + head and straddle(x) + straddle(y) agree mod 2.
bool parity_balanced(const Polygon& poly, const StabTable& st, std::size_t x, std::size_t y);

}  // namespace zpstab
