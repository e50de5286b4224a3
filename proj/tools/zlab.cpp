// zlab command line: Lyndon words, shuffle algebra, Magnus expansions,
// fundamental matrices, and the verification suites.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zlab/lie.hpp"
#include "zlab/magnus.hpp"
#include "zlab/parallel.hpp"
#include "zlab/shuffle.hpp"
#include "zlab/text.hpp"
#include "zlab/unitriangular.hpp"
#include "zlab/zassenhaus.hpp"

namespace {

using nlohmann::json;
using namespace zlab;

int failures = 0;

void line(bool ok, const std::string& what) {
    std::cout << (ok ? "ok:   " : "FAIL: ") << what << "\n";
    if (!ok)
        ++failures;
}

Alphabet alphabet_for(const std::string& u, const std::string& v, int m_flag) {
    if (m_flag > 0)
        return Alphabet(m_flag);
    int top = 0;
    for (char c : u + v)
        top = std::max(top, c - 'a' + 1);
    return Alphabet(std::max(top, 1));
}

// --- verification suites; each returns true when clean ---------------------

bool suite_lyndon(int m, int max_len, int hall_len) {
    bool all = true;
    Alphabet alphabet(m);
    for (int i = 1; i <= max_len; ++i) {
        std::set<int> len{i};
        std::size_t got = lyndon_words(alphabet, len).size();
        std::uint64_t want = necklace_count(m, i);
        bool ok = got == want;
        all &= ok;
        line(ok, "Lyndon count length " + std::to_string(i) + " over " + std::to_string(m) +
                 " letters: " + std::to_string(got) + " (necklace " + std::to_string(want) + ")");
    }
    std::vector<BracketedWord> cands = lyndon_bracketings(alphabet, hall_len);
    bool hall = check_hall_conditions(cands, alphabet, hall_len);
    all &= hall;
    line(hall, "Hall conditions on Lyndon bracketings up to length " + std::to_string(hall_len));
    return all;
}

bool suite_jump_set(std::uint64_t p, int n_max) {
    bool all = true;
    for (int n = 1; n <= n_max; ++n)
        all &= jump_set_equivalence(n, p);
    line(all, "jump set characterizations agree for n <= " + std::to_string(n_max) +
              ", p = " + std::to_string(p));
    return all;
}

// Modulus wide enough that the truncated commutator-series coefficients,
// which are genuine integers of modest size, are pinned exactly.
ModRing wide_ring(std::uint64_t p) {
    int k = 1;
    std::uint64_t v = p;
    while (v < (std::uint64_t(1) << 40)) {
        v *= p;
        ++k;
    }
    return ModRing(p, k);
}

bool suite_triangularity(std::uint64_t p, int m, int max_len) {
    bool all = true;
    Alphabet alphabet(m);
    ModRing ring = wide_ring(p);
    long checked = 0;
    for (const Word& w : lyndon_words_up_to(alphabet, max_len)) {
        NcSeries f = commutator_series(w, ring, alphabet, w.size());
        bool ok = f.coeff_or_zero(Word{}) == 1 && f.coeff_or_zero(w) == 1;
        for (const auto& [term, c] : f.terms()) {
            if (term.empty() || term == w)
                continue;
            if (compare_graded(term, w) < 0)
                ok = false;
            (void)c;
        }
        all &= ok;
        ++checked;
        if (!ok)
            line(false, "triangularity fails for " + word_to_string(w));
    }
    line(all, "triangularity of commutator series, m=" + std::to_string(m) + " p=" +
              std::to_string(p) + " (" + std::to_string(checked) + " words)");
    return all;
}

bool suite_cfl(int count, unsigned seed) {
    std::mt19937 rng(seed);
    const std::uint64_t primes[] = {2, 3, 5, 7};
    bool all = true;
    for (int t = 0; t < count; ++t) {
        std::uint64_t p = primes[rng() % 4];
        int m = 2 + static_cast<int>(rng() % 2);
        Alphabet alphabet(m);
        int k = 1 + static_cast<int>(rng() % 3);
        ModRing ring(p, k);

        auto random_word = [&](int len) {
            Word w;
            for (int i = 0; i < len; ++i)
                w = w.appended(static_cast<Letter>(rng() % static_cast<unsigned>(m)));
            return w;
        };
        Word u = random_word(1 + static_cast<int>(rng() % 3));
        Word v = random_word(1 + static_cast<int>(rng() % 3));
        GroupWord g(alphabet);
        int factors = 1 + static_cast<int>(rng() % 12);
        for (int i = 0; i < factors; ++i) {
            Letter x = static_cast<Letter>(rng() % static_cast<unsigned>(m));
            GroupWord gen = GroupWord::generator(alphabet, x);
            g = g * (rng() % 2 ? gen : gen.inverse());
        }

        int trunc = u.size() + v.size();
        NcSeries lam = magnus_expand(g, ring, trunc);
        std::uint64_t lhs = ring.mul(magnus_coefficient(g, u, ring),
                                     magnus_coefficient(g, v, ring));
        std::uint64_t rhs = pairing(lam, reduce(infiltration(u, v, alphabet), ring, trunc));
        if (lhs != rhs) {
            all = false;
            line(false, "coefficient identity fails for u=" + word_to_string(u) + " v=" +
                        word_to_string(v) + " g=" + group_word_to_string(g));
        }
    }
    line(all, "infiltration coefficient identity on " + std::to_string(count) +
              " random instances");
    return all;
}

bool suite_shuffle_relations(const LevelParams& params) {
    ShuffleRelationReport report = verify_shuffle_relations(params);
    for (const std::string& v : report.violations)
        line(false, v);
    line(report.passed(), "shuffle relations p=" + std::to_string(params.p) + " n=" +
                              std::to_string(params.n) + " m=" + std::to_string(params.m) +
                              " (" + std::to_string(report.relations_checked) + " relations)");
    return report.passed();
}

bool suite_unitriangular_matrix(const LevelParams& params) {
    FundamentalMatrix fm = fundamental_matrix(params);
    bool ok = true;
    for (std::size_t r = 0; r < fm.size(); ++r)
        for (std::size_t c = 0; c < fm.size(); ++c) {
            if (r == c)
                ok &= fm.entries[r][c] == 1;
            else if (r > c)
                ok &= fm.entries[r][c] == 0;
        }
    line(ok, "fundamental matrix is unitriangular, size " + std::to_string(fm.size()));
    return ok;
}

bool suite_main_theorem(const LevelParams& params) {
    bool ok = main_theorem_check(params);
    line(ok, "dimension match p=" + std::to_string(params.p) + " n=" + std::to_string(params.n) +
             " m=" + std::to_string(params.m));
    return ok;
}

bool suite_lie_ranks(std::uint64_t p, int m, int n_max) {
    bool all = true;
    Alphabet alphabet(m);
    ModRing ring(p, 1);
    for (int n = 1; n <= n_max; ++n) {
        std::set<int> len{n};
        std::vector<NcSeries> brackets;
        for (const Word& w : lyndon_words(alphabet, len))
            brackets.push_back(lie_expand(bracketing(w), ring, alphabet, n));
        int rank = homogeneous_rank(brackets, n, p);
        bool ok = rank == std::ssize(brackets);
        all &= ok;
        line(ok, "bracket expansions independent at degree " + std::to_string(n) + " (rank " +
                 std::to_string(rank) + "/" + std::to_string(brackets.size()) + ")");

        std::vector<NcSeries> powers;
        for (std::uint64_t q = 1; q <= static_cast<std::uint64_t>(n); q *= p) {
            int jj = 0;
            for (std::uint64_t v = 1; v < q; v *= p)
                ++jj;
            if (n % static_cast<int>(q) != 0) {
                if (q > static_cast<std::uint64_t>(n) / p)
                    break;
                continue;
            }
            std::set<int> base{n / static_cast<int>(q)};
            for (const Word& w : lyndon_words(alphabet, base))
                powers.push_back(restricted_power_expand(jj, bracketing(w), ring, alphabet, n));
        }
        int prank = homogeneous_rank(powers, n, p);
        bool pok = prank == std::ssize(powers);
        all &= pok;
        line(pok, "restricted power family independent at degree " + std::to_string(n) +
                  " (rank " + std::to_string(prank) + "/" + std::to_string(powers.size()) + ")");
    }
    return all;
}

bool suite_ut_powers(std::uint64_t p, int i_max, int j_max, int n_max, std::uint64_t cap) {
    VerifyReport report = verify_ut_powers(p, i_max, j_max, n_max, cap);
    for (const std::string& v : report.violations)
        line(false, v);
    for (const std::string& s : report.skipped)
        std::cout << "skip: " << s << " (order over cap)\n";
    line(report.passed(), "unitriangular power characterizations, p=" + std::to_string(p) + " (" +
                              std::to_string(report.checks) + " checks)");
    return report.passed();
}

std::vector<FiniteUTGroup> default_identity_groups(std::uint64_t p) {
    if (p == 2)
        return {FiniteUTGroup(2, 2, 0), FiniteUTGroup(2, 2, 1), FiniteUTGroup(3, 2, 0)};
    if (p == 3)
        return {FiniteUTGroup(2, 3, 0), FiniteUTGroup(2, 3, 1)};
    return {FiniteUTGroup(2, p, 0)};
}

bool suite_identities(std::uint64_t p, int n_cap) {
    bool all = true;
    for (const FiniteUTGroup& g : default_identity_groups(p)) {
        int n_max = std::min(n_cap, 2 * static_cast<int>(p));
        bool group_ok = true;
        for (int n = 1; n <= n_max; ++n) {
            VerifyReport report = verify_group_identities(g, n);
            for (const std::string& v : report.violations)
                line(false, v);
            group_ok &= report.passed();
        }
        all &= group_ok;
        line(group_ok, "filtration identities on U_" + std::to_string(g.dim()) + "(Z/" +
                       std::to_string(g.ring().modulus()) + "), n <= " + std::to_string(n_max));
    }
    return all;
}

bool suite_binomial(std::uint64_t p, int j_max, int jp_max, int t_max) {
    bool all = true;
    long checks = 0;
    for (int j = 0; j <= j_max; ++j)
        for (int jp = 0; jp <= jp_max; ++jp) {
            std::uint64_t top = 1;
            for (int s = 0; s < jp; ++s)
                top *= p;
            int hi = static_cast<int>(std::min<std::uint64_t>(top, static_cast<std::uint64_t>(t_max)));
            for (int t = 1; t <= hi; ++t) {
                ++checks;
                if (!binomial_equiv_check(p, j, jp, t)) {
                    all = false;
                    line(false, "binomial conditions disagree at j=" + std::to_string(j) +
                                " j'=" + std::to_string(jp) + " t=" + std::to_string(t));
                }
            }
        }
    line(all, "binomial divisibility conditions agree, p=" + std::to_string(p) + " (" +
              std::to_string(checks) + " grid points)");
    return all;
}

// --- plain subcommands ------------------------------------------------------

void run_lyndon(int m, int max_len, const std::string& lengths_csv, const std::string& format) {
    Alphabet alphabet(m);
    std::set<int> lengths;
    if (lengths_csv.empty()) {
        for (int i = 1; i <= max_len; ++i)
            lengths.insert(i);
    } else {
        std::stringstream ss{lengths_csv};
        std::string item;
        while (std::getline(ss, item, ','))
            lengths.insert(std::stoi(item));
    }
    std::vector<Word> words = lyndon_words(alphabet, lengths);
    if (format == "json") {
        json arr = json::array();
        for (const Word& w : words)
            arr.push_back(word_to_string(w));
        json out{{"m", m}, {"lengths", lengths}, {"words", arr}};
        std::cout << out.dump() << "\n";
    } else {
        for (const Word& w : words)
            std::cout << word_to_string(w) << "\n";
    }
}

void run_product(bool infiltrate, const std::string& u_text, const std::string& v_text,
                 int m_flag, const std::string& format) {
    Alphabet alphabet = alphabet_for(u_text, v_text, m_flag);
    Word u = parse_word(u_text, alphabet);
    Word v = parse_word(v_text, alphabet);
    IntPoly result = infiltrate ? infiltration(u, v, alphabet) : shuffle(u, v, alphabet);
    if (format == "json")
        std::cout << int_poly_to_json(result).dump() << "\n";
    else
        std::cout << int_poly_to_string(result) << "\n";
}

void run_lie_expand(const std::string& w_text, std::uint64_t p, int k, int trunc,
                    const std::string& format) {
    Alphabet alphabet = alphabet_for(w_text, "", 0);
    Word w = parse_word(w_text, alphabet);
    BracketedWord b = bracketing(w);
    if (p == 0) {
        IntPoly poly = lie_expand(b, alphabet);
        if (format == "json") {
            json out = int_poly_to_json(poly);
            out["bracketing"] = bracketed_to_string(b);
            std::cout << out.dump() << "\n";
        } else {
            std::cout << bracketed_to_string(b) << " = " << int_poly_to_string(poly) << "\n";
        }
        return;
    }
    int d = trunc > 0 ? trunc : w.size();
    NcSeries f = lie_expand(b, ModRing(p, k), alphabet, d);
    if (format == "json") {
        json out = series_to_json(f);
        out["bracketing"] = bracketed_to_string(b);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << bracketed_to_string(b) << " = " << series_to_string(f) << "\n";
    }
}

void run_magnus(const std::string& expr, std::uint64_t p, int k, int trunc,
                const std::string& coeff_word, int m_flag, const std::string& format) {
    GroupWord g = parse_group_word(expr, Alphabet(m_flag > 0 ? m_flag : max_alphabet_size));
    if (m_flag == 0) { // shrink to the letters actually used
        int top = 1;
        for (auto [x, e] : g.factors()) {
            top = std::max(top, x + 1);
            (void)e;
        }
        for (char c : coeff_word)
            top = std::max(top, c - 'a' + 1);
        g = GroupWord::from_factors(Alphabet(top), g.factors());
    }
    Alphabet alphabet = g.alphabet();
    ModRing ring(p, k);
    if (!coeff_word.empty()) {
        Word w = parse_word(coeff_word, alphabet);
        std::uint64_t c = magnus_coefficient(g, w, ring);
        if (format == "json") {
            json out{{"p", p}, {"K", k}, {"word", coeff_word},
                     {"coeff", c}, {"signed_coeff", signed_residue(c, ring.modulus())}};
            std::cout << out.dump() << "\n";
        } else {
            std::cout << c << "\n";
        }
        return;
    }
    NcSeries f = magnus_expand(g, ring, trunc);
    if (format == "json")
        std::cout << series_to_json(f).dump() << "\n";
    else
        std::cout << series_to_string(f) << "\n";
}

void run_fundamental_matrix(std::uint64_t p, int n, int m, int precision,
                            const std::string& format) {
    LevelParams params = precision > 0 ? LevelParams(p, n, m, precision)
                                       : LevelParams(p, n, m);
    if (precision > 0 && precision < jump_exponent(n, 1, p) + 1)
        std::cerr << "warning: precision below the default; results unreliable\n";
    FundamentalMatrix fm = fundamental_matrix(params);
    if (format == "json") {
        std::cout << matrix_to_json(fm).dump() << "\n";
    } else if (format == "csv") {
        std::cout << matrix_to_csv(fm);
    } else {
        std::cout << "index:";
        for (const Word& w : fm.index)
            std::cout << " " << word_to_string(w);
        std::cout << "\n";
        for (std::size_t r = 0; r < fm.size(); ++r) {
            for (std::size_t c = 0; c < fm.size(); ++c)
                std::cout << (c ? " " : "") << fm.entries[r][c];
            std::cout << "\n";
        }
    }
}

void run_dims(std::uint64_t p, int n, int m, const std::string& format) {
    LevelParams params(p, n, m);
    std::vector<int> jumps = jump_set(n, p);
    std::uint64_t h2 = h2_dimension(params);
    FundamentalMatrix fm = fundamental_matrix(params);
    bool theorem_applies = static_cast<std::uint64_t>(n) < p;
    int indec = theorem_applies ? indec_dimension(m, n, p) : -1;

    if (format == "json") {
        json out{{"p", p}, {"n", n}, {"m", m}, {"jump_set", jumps},
                 {"h2_dimension", h2}, {"matrix_size", fm.size()}};
        json per = json::object();
        for (int i : jumps)
            per[std::to_string(i)] = necklace_count(m, i);
        out["necklace_counts"] = per;
        if (theorem_applies) {
            out["indec_dimension"] = indec;
            out["main_theorem"] = main_theorem_check(params);
        }
        std::cout << out.dump() << "\n";
        return;
    }
    std::cout << "jump set:";
    for (int i : jumps)
        std::cout << " " << i;
    std::cout << "\n";
    for (int i : jumps)
        std::cout << "  necklaces of length " << i << ": " << necklace_count(m, i) << "\n";
    std::cout << "relation-space dimension: " << h2 << "\n";
    std::cout << "fundamental matrix size:  " << fm.size() << "\n";
    if (theorem_applies) {
        bool ok = main_theorem_check(params);
        std::cout << "shuffle quotient + m:     " << (m + indec) << "\n";
        std::cout << "main dimension check:     " << (ok ? "pass" : "FAIL") << "\n";
        if (!ok)
            ++failures;
    }
}

void run_jump_set(std::uint64_t p, int n, const std::string& format) {
    std::vector<int> jumps = jump_set(n, p);
    if (format == "json") {
        json out{{"p", p}, {"n", n}, {"jump_set", jumps}};
        std::cout << out.dump() << "\n";
        return;
    }
    for (std::size_t i = 0; i < jumps.size(); ++i)
        std::cout << (i ? " " : "") << jumps[i];
    std::cout << "\n";
}

void run_ut_filtration(std::uint64_t p, int i, int j, int n) {
    FiniteUTGroup g(i, p, j);
    std::cout << "U_" << i << "(Z/" << g.ring().modulus() << "), order " << g.order() << "\n";
    std::uint64_t mod = g.ring().modulus();
    for (int k = 1; k <= i + 1; ++k) {
        SubgroupSet term = lower_central(g, k);
        int free_entries = 0;
        for (int r = 0; r < g.matrix_size(); ++r)
            for (int c = r + 1; c < g.matrix_size(); ++c)
                if (c - r >= k)
                    ++free_entries;
        std::uint64_t predicted = 1;
        for (int t = 0; t < free_entries; ++t)
            predicted *= mod;
        int je = k <= n ? jump_exponent(n, k, p) : 0;
        std::uint64_t e = 1;
        for (int t = 0; t < je; ++t)
            e *= p;
        SubgroupSet pw = power_subgroup(term, e);
        bool ok = term.order() == predicted;
        std::cout << "  central term " << k << ": order " << term.order() << " (predicted "
                  << predicted << (ok ? ", ok" : ", FAIL") << "), power p^" << je
                  << " part: order " << pw.order() << "\n";
        if (!ok)
            ++failures;
    }
    SubgroupSet z = zassenhaus_product(g, n);
    std::cout << "level " << n << " subgroup: order " << z.order() << "\n";
    if (i <= n && j == jump_exponent(n, i, p)) {
        std::vector<int> jumps = jump_set(n, p);
        bool is_jump = std::find(jumps.begin(), jumps.end(), i) != jumps.end();
        bool is_central_line = z.order() == p;
        if (is_central_line) {
            UnitriMatrix probe = g.identity();
            std::uint64_t pj = 1;
            for (int t = 0; t < j; ++t)
                pj *= p;
            probe.set(0, g.matrix_size() - 1, pj);
            is_central_line = z.contains(probe);
        }
        bool ok = is_central_line == is_jump;
        std::cout << "central Z/p criterion (expected " << (is_jump ? "yes" : "no")
                  << "): " << (ok ? "pass" : "FAIL") << "\n";
        if (!ok)
            ++failures;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zlab: exact word combinatorics of filtered free groups"};
    app.require_subcommand(1);

    auto* lyndon_cmd = app.add_subcommand("lyndon", "List Lyndon words");
    int ly_m = 2, ly_max = 5;
    std::string ly_lengths, ly_format = "text";
    lyndon_cmd->add_option("--m", ly_m, "alphabet size")->required();
    lyndon_cmd->add_option("--max-len", ly_max, "maximum length");
    lyndon_cmd->add_option("--lengths", ly_lengths, "comma separated lengths");
    lyndon_cmd->add_option("--format", ly_format)->check(CLI::IsMember({"text", "json"}));

    std::string pu, pv, pf = "text";
    int pm = 0;
    auto* shuffle_cmd = app.add_subcommand("shuffle", "Shuffle product of two words");
    shuffle_cmd->add_option("u", pu, "first word")->required();
    shuffle_cmd->add_option("v", pv, "second word")->required();
    shuffle_cmd->add_option("--m", pm, "alphabet size (default: inferred)");
    shuffle_cmd->add_option("--format", pf)->check(CLI::IsMember({"text", "json"}));
    auto* infil_cmd = app.add_subcommand("infiltrate", "Infiltration product of two words");
    infil_cmd->add_option("u", pu, "first word")->required();
    infil_cmd->add_option("v", pv, "second word")->required();
    infil_cmd->add_option("--m", pm, "alphabet size (default: inferred)");
    infil_cmd->add_option("--format", pf)->check(CLI::IsMember({"text", "json"}));

    auto* lie_cmd = app.add_subcommand("lie-expand", "Expand the bracketing of a Lyndon word");
    std::string lw, lie_format = "text";
    std::uint64_t lie_p = 0;
    int lie_k = 1, lie_trunc = 0;
    lie_cmd->add_option("word", lw, "Lyndon word")->required();
    lie_cmd->add_option("--p", lie_p, "reduce modulo p^K (default: exact integers)");
    lie_cmd->add_option("--K", lie_k, "modulus exponent");
    lie_cmd->add_option("--trunc", lie_trunc, "truncation degree");
    lie_cmd->add_option("--format", lie_format)->check(CLI::IsMember({"text", "json"}));

    auto* magnus_cmd = app.add_subcommand("magnus", "Magnus expansion of a free-group word");
    std::string mg_expr, mg_word, mg_format = "text";
    std::uint64_t mg_p = 0;
    int mg_k = 1, mg_trunc = 3, mg_m = 0;
    magnus_cmd->add_option("expr", mg_expr, "group word, e.g. \"a b^-1\" or comm(a,comm(a,b))")
        ->required();
    magnus_cmd->add_option("--p", mg_p)->required();
    magnus_cmd->add_option("--K", mg_k, "modulus exponent");
    magnus_cmd->add_option("--trunc", mg_trunc, "truncation degree");
    magnus_cmd->add_option("--word", mg_word, "print only the coefficient of this word");
    magnus_cmd->add_option("--m", mg_m, "alphabet size (default: inferred)");
    magnus_cmd->add_option("--format", mg_format)->check(CLI::IsMember({"text", "json"}));

    auto* fm_cmd = app.add_subcommand("fundamental-matrix", "Pairing matrix of a level");
    std::uint64_t fm_p = 0;
    int fm_n = 0, fm_m = 0, fm_precision = 0;
    std::string fm_format = "text";
    fm_cmd->add_option("--p", fm_p)->required();
    fm_cmd->add_option("--n", fm_n)->required();
    fm_cmd->add_option("--m", fm_m)->required();
    fm_cmd->add_option("--precision", fm_precision, "override the coefficient precision K");
    fm_cmd->add_option("--format", fm_format)->check(CLI::IsMember({"text", "json", "csv"}));

    auto* dims_cmd = app.add_subcommand("dims", "Dimension bookkeeping of a level");
    std::uint64_t dm_p = 0;
    int dm_n = 0, dm_m = 0;
    std::string dm_format = "text";
    dims_cmd->add_option("--p", dm_p)->required();
    dims_cmd->add_option("--n", dm_n)->required();
    dims_cmd->add_option("--m", dm_m)->required();
    dims_cmd->add_option("--format", dm_format)->check(CLI::IsMember({"text", "json"}));

    auto* js_cmd = app.add_subcommand("jump-set", "Jump lengths of a level");
    std::uint64_t js_p = 0;
    int js_n = 0;
    std::string js_format = "text";
    js_cmd->add_option("--p", js_p)->required();
    js_cmd->add_option("--n", js_n)->required();
    js_cmd->add_option("--format", js_format)->check(CLI::IsMember({"text", "json"}));

    auto* ut_cmd = app.add_subcommand("ut-filtration", "Filtration of a finite unitriangular group");
    std::uint64_t ut_p = 0;
    int ut_i = 0, ut_j = 0, ut_n = 0;
    ut_cmd->add_option("--p", ut_p)->required();
    ut_cmd->add_option("--i", ut_i)->required();
    ut_cmd->add_option("--j", ut_j)->required();
    ut_cmd->add_option("--n", ut_n)->required();

    auto* verify_cmd = app.add_subcommand("verify", "Verification suites");
    verify_cmd->require_subcommand(1);
    std::uint64_t v_p = 3;
    int v_n = 3, v_m = 2, v_maxlen = 8, v_hall = 6, v_nmax = 200, v_count = 200;
    int v_imax = 3, v_jmax = 1, v_utn = 6, v_jpmax = 5, v_tmax = 200, v_lie_n = 5;
    std::uint64_t v_cap = 4096;
    unsigned v_seed = 20240801;

    auto* vall = verify_cmd->add_subcommand("all", "Run every suite");
    vall->add_option("--p", v_p)->required();
    vall->add_option("--n", v_n)->required();
    vall->add_option("--m", v_m)->required();
    vall->add_option("--seed", v_seed);

    auto* vlyndon = verify_cmd->add_subcommand("lyndon", "Lyndon counts and Hall conditions");
    vlyndon->add_option("--m", v_m);
    vlyndon->add_option("--max-len", v_maxlen);
    vlyndon->add_option("--hall-len", v_hall);

    auto* vjump = verify_cmd->add_subcommand("jump-set", "Jump set equivalence");
    vjump->add_option("--p", v_p)->required();
    vjump->add_option("--n-max", v_nmax);

    auto* vtri = verify_cmd->add_subcommand("triangularity", "Leading terms of commutator series");
    vtri->add_option("--p", v_p)->required();
    vtri->add_option("--m", v_m);
    vtri->add_option("--max-len", v_maxlen)->default_val(5);

    auto* vcfl = verify_cmd->add_subcommand("cfl", "Randomized infiltration coefficient identity");
    vcfl->add_option("--count", v_count);
    vcfl->add_option("--seed", v_seed);

    auto* vshuffle = verify_cmd->add_subcommand("shuffle-relations", "Shuffle relations of a level");
    vshuffle->add_option("--p", v_p)->required();
    vshuffle->add_option("--n", v_n)->required();
    vshuffle->add_option("--m", v_m)->required();

    auto* vmain = verify_cmd->add_subcommand("main-theorem", "Dimension match for n < p");
    vmain->add_option("--p", v_p)->required();
    vmain->add_option("--n", v_n)->required();
    vmain->add_option("--m", v_m)->required();

    auto* vlie = verify_cmd->add_subcommand("lie-ranks", "Independence of bracket expansions");
    vlie->add_option("--p", v_p)->required();
    vlie->add_option("--m", v_m)->default_val(2);
    vlie->add_option("--n-max", v_lie_n);

    auto* vut = verify_cmd->add_subcommand("ut-powers", "Power subgroups of unitriangular groups");
    vut->add_option("--p", v_p)->required();
    vut->add_option("--i-max", v_imax);
    vut->add_option("--j-max", v_jmax);
    vut->add_option("--n-max", v_utn);
    vut->add_option("--order-cap", v_cap);

    auto* vident = verify_cmd->add_subcommand("identities", "Filtration identities on finite groups");
    vident->add_option("--p", v_p)->required();
    vident->add_option("--n-max", v_utn)->default_val(16);

    auto* vbinom = verify_cmd->add_subcommand("binomial", "Binomial divisibility conditions");
    vbinom->add_option("--p", v_p)->required();
    vbinom->add_option("--j-max", v_jmax)->default_val(4);
    vbinom->add_option("--jp-max", v_jpmax);
    vbinom->add_option("--t-max", v_tmax);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (lyndon_cmd->parsed())
            run_lyndon(ly_m, ly_max, ly_lengths, ly_format);
        else if (shuffle_cmd->parsed())
            run_product(false, pu, pv, pm, pf);
        else if (infil_cmd->parsed())
            run_product(true, pu, pv, pm, pf);
        else if (lie_cmd->parsed())
            run_lie_expand(lw, lie_p, lie_k, lie_trunc, lie_format);
        else if (magnus_cmd->parsed())
            run_magnus(mg_expr, mg_p, mg_k, mg_trunc, mg_word, mg_m, mg_format);
        else if (fm_cmd->parsed())
            run_fundamental_matrix(fm_p, fm_n, fm_m, fm_precision, fm_format);
        else if (dims_cmd->parsed())
            run_dims(dm_p, dm_n, dm_m, dm_format);
        else if (js_cmd->parsed())
            run_jump_set(js_p, js_n, js_format);
        else if (ut_cmd->parsed())
            run_ut_filtration(ut_p, ut_i, ut_j, ut_n);
        else if (verify_cmd->parsed()) {
            if (vall->parsed()) {
                suite_lyndon(v_m, 8, 6);
                suite_jump_set(v_p, 200);
                suite_triangularity(v_p, v_m, std::min(v_n, 5));
                suite_lie_ranks(v_p, 2, std::min(v_n, 5));
                suite_cfl(200, v_seed);
                suite_shuffle_relations(LevelParams(v_p, v_n, v_m));
                suite_unitriangular_matrix(LevelParams(v_p, v_n, v_m));
                if (static_cast<std::uint64_t>(v_n) < v_p)
                    suite_main_theorem(LevelParams(v_p, v_n, v_m));
                suite_ut_powers(v_p, 3, 1, std::min(v_n, 6), 4096);
                suite_identities(v_p, 6);
                suite_binomial(v_p, 4, 5, 200);
                std::cout << (failures == 0 ? "all suites passed\n" : "failures detected\n");
            } else if (vlyndon->parsed()) {
                suite_lyndon(v_m, v_maxlen, v_hall);
            } else if (vjump->parsed()) {
                suite_jump_set(v_p, v_nmax);
            } else if (vtri->parsed()) {
                suite_triangularity(v_p, v_m, v_maxlen);
            } else if (vcfl->parsed()) {
                suite_cfl(v_count, v_seed);
            } else if (vshuffle->parsed()) {
                suite_shuffle_relations(LevelParams(v_p, v_n, v_m));
            } else if (vmain->parsed()) {
                suite_main_theorem(LevelParams(v_p, v_n, v_m));
            } else if (vlie->parsed()) {
                suite_lie_ranks(v_p, v_m, v_lie_n);
            } else if (vut->parsed()) {
                suite_ut_powers(v_p, v_imax, v_jmax, v_utn, v_cap);
            } else if (vident->parsed()) {
                suite_identities(v_p, v_utn);
            } else if (vbinom->parsed()) {
                suite_binomial(v_p, v_jmax, v_jpmax, v_tmax);
            }
            return failures == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return failures == 0 ? 0 : 1;
}
