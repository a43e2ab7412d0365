#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaugepoly/charge_index.hpp"
#include "gaugepoly/rational.hpp"

namespace gp::charges {

// One row of a decomposition table: the total class v, the target lens
// exponents, the minimizing decomposition w_1..w_k, its energy, and (for
// rank-3 N=4 tables) the capped index combination.
struct DecompRow {
    ChargeVector v;
    std::vector<long> s;
    std::vector<ChargeVector> w;
    Rat kappa;
    std::optional<long> ind_plus_h0;

    ChargeEnsemble ensemble(int N) const { return ChargeEnsemble{N, w}; }
};

// Exhaustive search for an energy-minimizing decomposition
// w_1 + ... + w_k = v + m(1,..,1), [w_i]_+ ≡ s_i (mod N), entries of every
// w_i in [-window, window]. Ties are broken by the lexicographically smallest
// (w_1,..,w_k). Throws when the congruence [v]_+ ≡ Σ s_i (mod N) fails and
// returns nothing when the window admits no decomposition.
std::optional<DecompRow> nice_decomposition_search(const ChargeVector& v,
                                                   const std::vector<long>& s, int N, int k,
                                                   long window, bool parallel = true);

// The published decomposition tables for 2 <= N <= 4: expected κ per row and,
// for the N=4 rank-3 tables, the expected ind+h⁰(β') column.
struct TableSpec {
    std::string name;  // e.g. "N=2, k=2"
    int N = 0, k = 0;
    std::vector<DecompRow> rows;  // expected values; w as published
};
const std::vector<TableSpec>& reference_tables();

struct TableCheckRow {
    ChargeVector v;
    std::vector<long> s;
    std::vector<ChargeVector> w_found;
    Rat kappa_found, kappa_expected;
    std::optional<long> ind_found, ind_expected;
    bool kappa_ok = false, ind_ok = true;
};
struct TableCheck {
    std::string name;
    int N = 0, k = 0;
    std::vector<TableCheckRow> rows;
    bool pass = true;
};

// Regenerates every table by brute-force search at the given window and
// compares κ (and ind+h⁰ where published) exactly.
std::vector<TableCheck> regenerate_tables(long window = 2, bool parallel = true);

std::string format_table_text(const TableCheck& t);

}  // namespace gp::charges
