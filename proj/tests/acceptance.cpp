// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// fails. Each criterion also carries a wall-clock ceiling that is enforced.

#include "necklaces/astute_graph.hpp"
#include "necklaces/constructors.hpp"
#include "necklaces/counting.hpp"
#include "necklaces/stat_tests.hpp"
#include "necklaces/verifier.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace necklaces;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double limit_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < limit_seconds;
    if (!in_time)
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    if (!(ok && in_time))
        ++failures;
    std::printf("%s  criterion %2d  %-42s  %8.3f s (< %g s)%s%s\n",
                ok && in_time ? "PASS" : "FAIL", number, name.c_str(), secs, limit_seconds,
                detail.empty() ? "" : "  -- ", detail.c_str());
}

Word B(const char* text) { return parse_word(text, 2); }

bool crit1_worked_examples(std::string& detail) {
    bool ok = true;
    ok = ok && is_kn_perfect(B("00011011"), 2, 2, 2).is_perfect;
    ok = ok && is_kn_perfect(B("00100111"), 2, 2, 2).is_perfect;
    ok = ok && is_kn_perfect(B("000110101111001010011100"), 2, 3, 3).is_perfect;
    ok = ok && !is_kn_perfect(B("00011110"), 2, 2, 2).is_perfect;
    ok = ok && !is_kn_perfect(B("000101110111010001011100"), 2, 3, 3).is_perfect;
    ok = ok && !is_kn_perfect(B("000001011010110111101100"), 2, 3, 3).is_perfect;
    if (!ok)
        detail = "a verdict disagrees with the worked examples";
    return ok;
}

bool crit2_arithmetic(std::string& detail) {
    long verified = 0;
    for (int b : {2, 3, 4, 5})
        for (int k = 1; k <= 3; ++k)
            for (std::uint64_t r = 1; r < checked_pow(b, k, 1 << 20); ++r) {
                if (std::gcd(r, static_cast<std::uint64_t>(b)) != 1)
                    continue;
                if (!is_perfect(arithmetic_necklace(b, k, r), b, k).is_perfect) {
                    detail = "imperfect output at b=" + std::to_string(b) +
                             " k=" + std::to_string(k) + " r=" + std::to_string(r);
                    return false;
                }
                ++verified;
            }
    for (std::uint64_t r = 1; r < 16; r += 2) {
        if (!is_perfect(arithmetic_necklace(2, 4, r), 2, 4).is_perfect) {
            detail = "imperfect output at b=2 k=4 r=" + std::to_string(r);
            return false;
        }
        ++verified;
    }
    detail = std::to_string(verified) + " constructions verified";
    return true;
}

bool crit3_count_222(std::string& detail) {
    const BigCount formula = perfect_count(2, 2, 2).total;
    const BigCount brute = brute_force_count_serial(2, 2, 2).total;
    detail = "formula " + formula.get_str() + ", brute force " + brute.get_str();
    return formula == 2 && brute == 2;
}

bool crit4_count_233(std::string& detail) {
    const BigCount formula = perfect_count(2, 3, 3).total;

    const auto t0 = std::chrono::steady_clock::now();
    const BigCount serial = brute_force_count_serial(2, 3, 3).total;
    const double serial_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const auto t1 = std::chrono::steady_clock::now();
    const BigCount sharded = brute_force_count(2, 3, 3).total;
    const double sharded_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();

    std::ostringstream os;
    os << "formula " << formula.get_str() << ", serial " << serial.get_str() << " ("
       << serial_s << " s), sharded " << sharded.get_str() << " (" << sharded_s << " s)";
    detail = os.str();
    return formula == 172 && serial == formula && sharded == formula && serial_s < 180.0 &&
           sharded_s < 30.0;
}

bool crit5_enumeration(std::string& detail) {
    const std::vector<std::tuple<int, int, long, unsigned long>> cases{
        {2, 2, 1, 1}, {2, 2, 2, 4}, {2, 3, 1, 2}, {2, 3, 3, 512}, {3, 2, 1, 24}};
    for (auto [b, k, j, expected] : cases) {
        const AstuteGraph g = build_astute(b, k - 1, j);
        const auto en = enumerate_euler_circuits(g);
        if (en.circuits.size() != expected ||
            euler_count_formula(b, k, j) != BigCount(expected)) {
            detail = "mismatch at b=" + std::to_string(b) + " k=" + std::to_string(k) +
                     " j=" + std::to_string(j) + ": enumerated " +
                     std::to_string(en.circuits.size());
            return false;
        }
    }
    detail = "5 graphs enumerated";
    return true;
}

bool crit6_best(std::string& detail) {
    const std::vector<std::tuple<int, int, long>> cases{
        {2, 2, 1}, {2, 2, 2}, {2, 3, 1}, {2, 3, 3}, {3, 2, 1}};
    for (auto [b, k, j] : cases) {
        const AstuteGraph g = build_astute(b, k - 1, j);
        const std::uint64_t bk1 = checked_pow(b, k - 1, 1 << 20);
        const BigCount expected =
            big_pow(BigCount(b), static_cast<unsigned long>(j * bk1 - k));
        const BigCount at0 = arborescence_count(g, 0);
        const BigCount at_last = arborescence_count(g, g.node_count - 1);
        const BigCount circuits(
            static_cast<unsigned long>(enumerate_euler_circuits(g).circuits.size()));
        const BigCount assembled =
            at0 * big_pow(big_factorial(b - 1), static_cast<unsigned long>(g.node_count));
        if (at0 != expected || at_last != expected || circuits != assembled) {
            detail = "mismatch at b=" + std::to_string(b) + " k=" + std::to_string(k) +
                     " j=" + std::to_string(j);
            return false;
        }
    }
    detail = "matrix-tree and circuit assembly agree at two roots each";
    return true;
}

bool crit7_char_poly(std::string& detail) {
    const std::vector<std::tuple<int, int, long>> cases{
        {2, 2, 1}, {2, 2, 2}, {2, 3, 3}, {3, 2, 1}};
    const std::vector<long> points{-2, -1, 0, 1, 2, 3};
    for (auto [b, k, j] : cases)
        if (!check_char_poly(b, k, j, points)) {
            detail = "identity failed at b=" + std::to_string(b) + " k=" + std::to_string(k) +
                     " j=" + std::to_string(j);
            return false;
        }
    detail = "4 graphs at 6 integer points";
    return true;
}

bool crit8_multiplicity(std::string& detail) {
    // (2,2,2): 4 circuits, the two known necklaces, twice each
    {
        const AstuteGraph g = build_astute(2, 1, 2);
        std::map<Word, long> mult;
        for (const auto& c : enumerate_euler_circuits(g).circuits)
            ++mult[canonical_rotation(circuit_to_word(g, c))];
        if (mult.size() != 2 || mult[B("00011011")] != 2 || mult[B("00100111")] != 2) {
            detail = "(2,2,2) multiplicities wrong";
            return false;
        }
    }
    // (2,3,3): 512 circuits -> 170 irreducible x3 + 2 repeated de Bruijn x1
    const CountReport rep = circuit_enumeration_count(2, 3, 3);
    if (rep.total != 172 || rep.per_divisor.size() != 2) {
        detail = "(2,3,3) collapse wrong: total " + rep.total.get_str();
        return false;
    }
    const auto& j1 = rep.per_divisor[0];
    const auto& j3 = rep.per_divisor[1];
    if (j1.j != 1 || j1.irreducible != 2 || j3.j != 3 || j3.irreducible != 170) {
        detail = "(2,3,3) period classes wrong";
        return false;
    }
    // e(n) = sum over j of j * p(j), from observed values
    const BigCount assembled = BigCount(1) * j1.irreducible + BigCount(3) * j3.irreducible;
    if (assembled != euler_count_formula(2, 3, 3)) {
        detail = "e(3) != sum of j*p(j) from observations";
        return false;
    }
    detail = "512 circuits collapse to 2 + 170 necklaces with the right multiplicities";
    return true;
}

bool crit9_proposition(std::string& detail) {
    const std::vector<std::tuple<Word, int, long>> cases{
        {ordered_necklace(2, 2), 2, 2},
        {ordered_necklace(2, 3), 3, 3},
        {B("0011"), 2, 1},
    };
    for (const auto& [w, k, m] : cases) {
        const auto demo = demonstrate_proposition(PeriodicSequence(w), 2, k, m);
        Rational expected(1);
        expected /= Rational(static_cast<unsigned long>(checked_pow(2, demo.h, 1 << 20)));
        expected.canonicalize();
        bool sizes_ok = static_cast<int>(demo.sizes.size()) == k;
        for (const auto& sweep : demo.sizes)
            sizes_ok = sizes_ok && sweep.all_zero;
        if (!demo.ok || !sizes_ok || demo.rejector_statistic != expected) {
            detail = "demonstration failed at k=" + std::to_string(k) +
                     " m=" + std::to_string(m);
            return false;
        }
    }
    detail = "3 (k,m) cases: all sizes <= k pass, size-h rejector exact";
    return true;
}

bool crit10_symmetries(std::string& detail) {
    std::set<std::pair<Word, std::pair<int, long>>> necklaces;
    {
        const AstuteGraph g = build_astute(2, 1, 2);
        for (const auto& c : enumerate_euler_circuits(g).circuits)
            necklaces.insert({canonical_rotation(circuit_to_word(g, c)), {2, 2}});
        const AstuteGraph g3 = build_astute(2, 2, 3);
        for (const auto& c : enumerate_euler_circuits(g3).circuits)
            necklaces.insert({canonical_rotation(circuit_to_word(g3, c)), {3, 3}});
    }
    long checked = 0;
    for (const auto& [w, kn] : necklaces) {
        const auto [k, n] = kn;
        if (!is_kn_perfect(permute_digits(w, {1, 0}), 2, k, n).is_perfect ||
            !is_kn_perfect(reflect(w), 2, k, n).is_perfect) {
            detail = "a symmetry image went imperfect";
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " necklaces stay perfect under swap and reflection";
    return true;
}

} // namespace

int main() {
    criterion(1, "worked-example verdicts", 0.010, crit1_worked_examples);
    criterion(2, "arithmetic constructions at desk scale", 5.0, crit2_arithmetic);
    criterion(3, "count (2,2,2) formula vs brute force", 1.0, crit3_count_222);
    criterion(4, "count (2,3,3) formula vs 2^24 oracle", 180.0, crit4_count_233);
    criterion(5, "circuit enumeration vs closed count", 30.0, crit5_enumeration);
    criterion(6, "matrix-tree vs circuit assembly", 5.0, crit6_best);
    criterion(7, "characteristic polynomial identity", 5.0, crit7_char_poly);
    criterion(8, "circuit-to-necklace multiplicities", 60.0, crit8_multiplicity);
    criterion(9, "pass/reject demonstration, both halves", 10.0, crit9_proposition);
    criterion(10, "digit permutation and reflection closure", 10.0, crit10_symmetries);

    if (failures) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
