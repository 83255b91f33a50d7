// Acceptance suite: one pass/fail line per criterion. Criteria 1 and 8 drive
// the CLI binary; the rest go through the library. Exit code is 0 iff every
// criterion that ran passed.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "alcove/json_io.hpp"
#include "alcove/pyramid.hpp"
#include "alcove/render.hpp"

using namespace alcove;

namespace {

std::string g_cli = "tools/alcove-shi";

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args)
{
    CliResult r;
    std::string cmd = g_cli + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& msg)
    {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += msg;
        }
    }

    void note(const std::string& msg)
    {
        if (!detail.empty()) detail += "; ";
        detail += msg;
    }
};

const char* kLeftPyramid = "1 -2 0 3 7; 0 -2 4 11; 0 2 11; 4 9; 11";
const char* kRightPyramid = "0 -1 2 4 -3; 0 1 7 2; 2 6 4; 7 3; 4";

int aidx(const RootSystem& rs, int i, int j)
{
    IntVec coords(static_cast<size_t>(rs.rank()), 0);
    for (int p = i; p < j; ++p) coords[static_cast<size_t>(p - 1)] = 1;
    return rs.root_index(coords);
}

// ---- criterion 1: B2 fixture through the CLI -------------------------------

Check criterion1()
{
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    CliResult r = run_cli("shi --type B --rank 2 --word \"1\"");
    double dt = seconds_since(t0);
    c.require(r.exit_code == 0, "CLI exited " + std::to_string(r.exit_code));
    c.require(r.out.find("k = (-1, 0, 0, 0)") != std::string::npos,
              "unexpected output: " + r.out);
    CliResult j = run_cli("shi --type B --rank 2 --word \"1\" --json");
    c.require(j.exit_code == 0, "--json run failed");
    if (j.exit_code == 0) {
        auto parsed = nlohmann::json::parse(j.out);
        c.require(parsed["k"] == nlohmann::json({-1, 0, 0, 0}), "JSON k mismatch");
        c.require(parsed["schema"] == "alcove-shi/1", "schema tag missing");
    }
    c.require(dt < 1.0, "took " + std::to_string(dt) + "s");
    c.note("iota(s_1) = (-1,0,0,0) in " + std::to_string(dt) + "s");
    return c;
}

// ---- criterion 2: A5 pyramid fixture ---------------------------------------

Check criterion2()
{
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    RootSystem a5 = RootSystem::build(Type::A, 5);
    ShiVector left = parse_pyramid(a5, kLeftPyramid);
    ShiVector right = parse_pyramid(a5, kRightPyramid);
    c.require(is_alcove(a5, left.k), "left pyramid failed is_alcove");
    c.require(is_alcove(a5, right.k), "right pyramid failed is_alcove");

    AdmittedVector ll = lambda_of(a5, left);
    AdmittedVector lr = lambda_of(a5, right);
    c.require(ll == lr, "lambda differs between the pyramids");

    // positions where some split alpha + beta = theta carries the +1: the
    // same seven on both pyramids (the lambda values themselves are 1 on
    // five of them and 2 on v15/v16; frozen below)
    const std::set<std::pair<int, int>> plus_one_expected = {
        {1, 3}, {3, 5}, {4, 6}, {1, 4}, {2, 5}, {1, 5}, {1, 6}};
    for (const ShiVector* v : {&left, &right}) {
        std::set<std::pair<int, int>> plus_one;
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 2; j <= 6; ++j) {
                Int vij = v->k[static_cast<size_t>(aidx(a5, i, j))];
                Int mx = 0;
                for (int k = i + 1; k < j; ++k)
                    mx = std::max(mx, vij - v->k[static_cast<size_t>(aidx(a5, i, k))] -
                                          v->k[static_cast<size_t>(aidx(a5, k, j))]);
                if (mx == 1) plus_one.insert({i, j});
            }
        c.require(plus_one == plus_one_expected, "+1 positions differ from the frozen set");
    }
    const std::map<std::pair<int, int>, Int> frozen_lambda = {
        {{1, 3}, 1}, {{2, 4}, 0}, {{3, 5}, 1}, {{4, 6}, 1}, {{1, 4}, 1},
        {{2, 5}, 1}, {{3, 6}, 1}, {{1, 5}, 2}, {{2, 6}, 1}, {{1, 6}, 2}};
    for (const auto& [pos, val] : frozen_lambda)
        c.require(ll.lambda[static_cast<size_t>(aidx(a5, pos.first, pos.second))] == val,
                  "lambda mismatch at a frozen position");

    IntVec sum1 = modular_invariant(a5, IntVec(left.k.begin(), left.k.begin() + 5));
    IntVec sum2 = modular_invariant(a5, IntVec(right.k.begin(), right.k.begin() + 5));
    c.require(sum1 == IntVec{2}, "left section sum is not 2 mod 6");
    c.require(sum2 == IntVec{5}, "right section sum is not 5 mod 6");

    bool theorem = same_orientation_theorem(a5, left, right);
    bool modular = same_orientation_modular(a5, left, right);
    AffineElement w1 = element_of_shi_vector(a5, left);
    AffineElement w2 = element_of_shi_vector(a5, right);
    bool oracle = same_orientation_oracle(a5, w1, w2);
    c.require(!oracle && !theorem && !modular, "expected all three verdicts 'different'");

    double dt = seconds_since(t0);
    c.require(dt < 1.0, "took " + std::to_string(dt) + "s");
    c.note("same component, sums 2 and 5 mod 6, all verdicts 'different' in " +
           std::to_string(dt) + "s");
    return c;
}

// ---- criterion 3: B2 obstruction and its localization ----------------------

Check criterion3()
{
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    RootSystem b2 = RootSystem::build(Type::B, 2);
    Section s1{{1, 3}};
    Section s2{{1, 2}};
    c.require(!conjugate(b2, s1, s2).has_value(), "(1,3) vs (1,2) conjugate over Z");
    c.require(trivial_over(b2, {2}), "H1 not trivial over Z[1/2]");
    auto z = conjugate_over(b2, s1, s2, {2});
    c.require(z.has_value(), "no witness over Z[1/2]");
    if (z.has_value()) {
        for (const Rat& zi : *z) {
            Int den = zi.den();
            while (den % 2 == 0) den /= 2;
            c.require(den == 1, "witness denominator is not a power of 2");
        }
        RatVec lhs = b2.cartan().transposed().mul_vec(*z);
        c.require(lhs == RatVec{Rat(0), Rat(1)}, "witness does not solve tC z = d");
    }
    double dt = seconds_since(t0);
    c.require(dt < 1.0, "took " + std::to_string(dt) + "s");
    c.note("obstruction over Z, dissolves over Z[1/2], in " + std::to_string(dt) + "s");
    return c;
}

// ---- criterion 4: Remark 3.9 fixtures --------------------------------------

Check criterion4()
{
    Check c;
    RootSystem a3 = RootSystem::build(Type::A, 3);
    c.require(!conjugate(a3, Section{{3, 4, 5}}, Section{{6, 7, 8}}).has_value(),
              "A3 (3,4,5)/(6,7,8) came out conjugate");

    std::mt19937_64 gen(20240817);
    std::uniform_int_distribution<Int> base(-1000, 1000);
    std::uniform_int_distribution<Int> delta(-50, 50);
    for (int p : {2, 3, 5, 7}) {
        int n = p - 1;
        RootSystem rs = RootSystem::build(Type::A, n);
        CohomologyGroup g = h1_group(rs);
        int same = 0;
        Int bad_c = 0;
        bool have_bad = false;
        for (int rep = 0; rep < 200; ++rep) {
            IntVec s(static_cast<size_t>(n));
            for (Int& x : s) x = base(gen);
            Int cdiff = delta(gen);
            IntVec t = s;
            for (Int& x : t) x = add_i(x, cdiff);
            if (conjugate(g, Section{t}, Section{s}).has_value()) {
                ++same;
            } else if (!have_bad) {
                have_bad = true;
                bad_c = cdiff;
            }
        }
        if (same != 200)
            c.require(false, "p=" + std::to_string(p) + ": only " + std::to_string(same) +
                                 "/200 constant-difference pairs were same-class (first "
                                 "counterexample: constant difference " +
                                 std::to_string(bad_c) + ")");
    }
    if (!c.ok)
        c.note(
            "the p=2 leg cannot pass: in A1 a constant difference c is a coboundary iff 2 | c "
            "(tC = [2]), so odd constants give distinct classes; the collapse holds for odd "
            "primes only");
    else
        c.note("all constant-difference pairs collapsed");
    return c;
}

// ---- criterion 5: H1 orders by Smith normal form ---------------------------

Check criterion5()
{
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    auto expect_order = [&](const RootSystem& rs, Int want) {
        CohomologyGroup g = h1_group(rs);
        c.require(g.order == want,
                  rs.label() + ": order " + std::to_string(g.order) + " != " + std::to_string(want));
        c.require(g.order == abs_i(det_bareiss(rs.cartan())), rs.label() + ": order != |det C|");
    };
    for (int n = 1; n <= 8; ++n) expect_order(RootSystem::build(Type::A, n), n + 1);
    for (int n = 2; n <= 8; ++n) expect_order(RootSystem::build(Type::B, n), 2);
    for (int n = 2; n <= 8; ++n) expect_order(RootSystem::build(Type::C, n), 2);
    for (int n = 3; n <= 8; ++n) expect_order(RootSystem::build(Type::D, n), 4);
    expect_order(RootSystem::build(Type::E, 6), 3);
    expect_order(RootSystem::build(Type::E, 7), 2);
    expect_order(RootSystem::build(Type::E, 8), 1);
    expect_order(RootSystem::build(Type::F, 4), 1);
    expect_order(RootSystem::build(Type::G, 2), 1);
    double dt = seconds_since(t0);
    c.require(dt < 1.0, "took " + std::to_string(dt) + "s");
    c.note("all 33 systems in " + std::to_string(dt) + "s");
    return c;
}

// ---- criterion 6: cross-validation balls -----------------------------------

struct BallSpec {
    Type type;
    int rank;
    int radius;
};

const std::array<BallSpec, 7> kBalls = {{{Type::A, 2, 10},
                                         {Type::A, 3, 8},
                                         {Type::B, 2, 12},
                                         {Type::B, 3, 7},
                                         {Type::C, 3, 7},
                                         {Type::D, 4, 6},
                                         {Type::G, 2, 12}}};

Check criterion6()
{
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    std::string sizes;
    for (const BallSpec& b : kBalls) {
        RootSystem rs = RootSystem::build(b.type, b.rank);
        BallReport rep = classify_ball(rs, b.radius);
        c.require(rep.discrepancies.empty(),
                  rs.label() + " radius " + std::to_string(b.radius) + ": " +
                      std::to_string(rep.discrepancies.size()) + " discrepancies");
        bool want_modular = b.type != Type::G;
        c.require(rep.modular_checked == want_modular, rs.label() + ": modular coverage wrong");
        if (!sizes.empty()) sizes += ", ";
        sizes += rs.label() + ":" + std::to_string(rep.ball_size);
    }
    double dt = seconds_since(t0);
    c.require(dt < 300.0, "took " + std::to_string(dt) + "s");
    c.note("balls " + sizes + " all clean in " + std::to_string(dt) + "s");
    return c;
}

// ---- criterion 7: property suites ------------------------------------------

Check criterion7()
{
    Check c;

    // iota-injectivity on every criterion-6 ball
    for (const BallSpec& b : kBalls) {
        RootSystem rs = RootSystem::build(b.type, b.rank);
        std::vector<BallElement> ball = enumerate_ball(rs, b.radius);
        std::set<IntVec> vecs;
        for (const BallElement& be : ball) vecs.insert(shi_vector(rs, be.g).k);
        c.require(vecs.size() == ball.size(), rs.label() + ": iota not injective on the ball");
    }

    // translation covariance, 500 random (x, w) pairs per system
    std::mt19937_64 gen(424243);
    for (const BallSpec& b : kBalls) {
        RootSystem rs = RootSystem::build(b.type, b.rank);
        std::uniform_int_distribution<int> letter(0, rs.rank());
        std::uniform_int_distribution<int> len(0, 8);
        std::uniform_int_distribution<Int> coord(-6, 6);
        for (int rep = 0; rep < 500; ++rep) {
            Word w(static_cast<size_t>(len(gen)));
            for (int& l : w) l = letter(gen);
            AffineElement u = evaluate_word(rs, w);
            IntVec x(static_cast<size_t>(rs.rank()));
            for (Int& q : x) q = coord(gen);
            ShiVector before = shi_vector(rs, u);
            ShiVector after = shi_vector(rs, multiply(translation_element(rs, x), u));
            IntVec off = coroot_pairings(rs, x);
            for (int t = 0; t < rs.root_count(); ++t)
                if (after.k[static_cast<size_t>(t)] !=
                    add_i(before.k[static_cast<size_t>(t)], off[static_cast<size_t>(t)])) {
                    c.require(false, rs.label() + ": translation covariance failed");
                    break;
                }
        }
    }

    // fast_class vs conjugate, exhaustive [-3,3]^n for n <= 4, types A-D;
    // type-D mismatches are emitted as discrepancy records
    std::vector<RootSystem> boxes;
    for (int n = 1; n <= 4; ++n) boxes.push_back(RootSystem::build(Type::A, n));
    for (int n = 2; n <= 4; ++n) boxes.push_back(RootSystem::build(Type::B, n));
    for (int n = 2; n <= 4; ++n) boxes.push_back(RootSystem::build(Type::C, n));
    for (int n = 3; n <= 4; ++n) boxes.push_back(RootSystem::build(Type::D, n));
    size_t type_d_records = 0;
    for (const RootSystem& rs : boxes) {
        CohomologyGroup g = h1_group(rs);
        const int n = rs.rank();
        IntVec d(static_cast<size_t>(n), -3);
        for (;;) {
            bool fast = fast_class(rs, DifferenceVector{d});
            bool truth =
                conjugate(g, Section{d}, Section{IntVec(static_cast<size_t>(n), 0)}).has_value();
            if (fast != truth) {
                if (rs.type() == Type::D) {
                    ++type_d_records;
                    std::ostringstream rec;
                    rec << "{\"type\":\"D\",\"rank\":" << n << ",\"d\":[";
                    for (int i = 0; i < n; ++i) rec << (i ? "," : "") << d[static_cast<size_t>(i)];
                    rec << "],\"fast_class\":" << (fast ? "true" : "false")
                        << ",\"conjugate\":" << (truth ? "true" : "false") << "}";
                    std::cout << "  type-D discrepancy record: " << rec.str() << "\n";
                } else {
                    c.require(false, rs.label() + ": fast_class disagrees with conjugate");
                    break;
                }
            }
            int pos = n - 1;
            while (pos >= 0 && d[static_cast<size_t>(pos)] == 3) d[static_cast<size_t>(pos--)] = -3;
            if (pos < 0) break;
            ++d[static_cast<size_t>(pos)];
        }
    }
    c.note("type-D discrepancy records: " + std::to_string(type_d_records));

    // cancellation identity over every triple of every supported system
    std::vector<RootSystem> all;
    for (int n = 1; n <= 8; ++n) all.push_back(RootSystem::build(Type::A, n));
    for (int n = 2; n <= 8; ++n) all.push_back(RootSystem::build(Type::B, n));
    for (int n = 2; n <= 8; ++n) all.push_back(RootSystem::build(Type::C, n));
    for (int n = 3; n <= 8; ++n) all.push_back(RootSystem::build(Type::D, n));
    for (int n = 6; n <= 8; ++n) all.push_back(RootSystem::build(Type::E, n));
    all.push_back(RootSystem::build(Type::F, 4));
    all.push_back(RootSystem::build(Type::G, 2));
    for (const RootSystem& rs : all) {
        for (const Triple& t : rs.sum_triples()) {
            const PositiveRoot& a = rs.root(t.left);
            const PositiveRoot& b = rs.root(t.right);
            const PositiveRoot& s = rs.root(t.sum);
            for (int i = 0; i < rs.rank(); ++i)
                if (mul_i(s.sq_norm, s.coroot[static_cast<size_t>(i)]) !=
                    add_i(mul_i(a.sq_norm, a.coroot[static_cast<size_t>(i)]),
                          mul_i(b.sq_norm, b.coroot[static_cast<size_t>(i)]))) {
                    c.require(false, rs.label() + ": cancellation identity failed");
                    break;
                }
        }
    }
    return c;
}

// ---- criterion 8: rendering ------------------------------------------------

size_t count_polygon_fills(const std::string& path, Check& c)
{
    std::ifstream in(path, std::ios::binary);
    c.require(static_cast<bool>(in), "missing svg " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string svg = buf.str();
    std::set<std::string> fills;
    size_t pos = 0;
    while ((pos = svg.find("<polygon", pos)) != std::string::npos) {
        size_t f = svg.find("fill=\"", pos);
        fills.insert(svg.substr(f + 6, 7));
        pos = f;
    }
    return fills.size();
}

Check criterion8()
{
    Check c;
    CliResult r1 = run_cli("render --type B2 --radius 8 --color orientation -o acceptance_b2_a.svg");
    CliResult r2 = run_cli("render --type B2 --radius 8 --color orientation -o acceptance_b2_b.svg");
    c.require(r1.exit_code == 0 && r2.exit_code == 0, "render CLI failed");
    c.require(count_polygon_fills("acceptance_b2_a.svg", c) == 8, "B2 orientation colors != 8");

    std::ifstream fa("acceptance_b2_a.svg", std::ios::binary);
    std::ifstream fb("acceptance_b2_b.svg", std::ios::binary);
    std::string sa((std::istreambuf_iterator<char>(fa)), std::istreambuf_iterator<char>());
    std::string sb((std::istreambuf_iterator<char>(fb)), std::istreambuf_iterator<char>());
    c.require(!sa.empty() && sa == sb, "two B2 renders are not byte-identical");

    CliResult r3 = run_cli("render --type A --rank 2 --radius 3 --color component -o acceptance_a2.svg");
    c.require(r3.exit_code == 0, "A2 render failed");
    c.require(count_polygon_fills("acceptance_a2.svg", c) == 2, "A2 component colors != 2");
    c.note("B2 orientation = 8 colors, A2 component = 2 colors, byte-identical reruns");
    return c;
}

}  // namespace

int main(int argc, char** argv)
{
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--cli" && i + 1 < argc) {
            g_cli = argv[++i];
        } else if (arg == "--criterion" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: acceptance [--cli <path-to-alcove-shi>] [--criterion N]\n";
            return 2;
        }
    }

    using CriterionFn = Check (*)();
    const std::array<CriterionFn, 8> criteria = {criterion1, criterion2, criterion3, criterion4,
                                                 criterion5, criterion6, criterion7, criterion8};
    bool all_ok = true;
    for (int n = 1; n <= 8; ++n) {
        if (only != 0 && n != only) continue;
        Check c;
        try {
            c = criteria[static_cast<size_t>(n - 1)]();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail = std::string("exception: ") + e.what();
        }
        std::cout << "criterion " << n << ": " << (c.ok ? "PASS" : "FAIL");
        if (!c.detail.empty()) std::cout << " - " << c.detail;
        std::cout << "\n";
        all_ok = all_ok && c.ok;
    }
    return all_ok ? 0 : 1;
}
