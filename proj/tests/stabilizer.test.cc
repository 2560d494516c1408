#include "qlist/stabilizer.h"

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.h"
#include "qlist/rng.h"

using namespace qlist;

namespace {

PauliOp P(const char *text) { return PauliOp::from_string(text); }

std::vector<PauliOp> ops(std::initializer_list<const char *> texts) {
    std::vector<PauliOp> out;
    for (const char *t : texts) out.push_back(P(t));
    return out;
}

StabilizerCode four_two() { return StabilizerCode::validate(ops({"XXXX", "ZZZZ"}), 4, 2); }

void expect_logical_relations(const StabilizerCode &code) {
    const auto &logicals = code.logicals();
    ASSERT_EQ(logicals.size(), 2 * code.k());
    for (std::size_t a = 0; a < logicals.size(); ++a) {
        for (const auto &g : code.generators()) EXPECT_FALSE(omega(logicals[a], g));
        for (std::size_t b = 0; b < logicals.size(); ++b) {
            bool paired = a / 2 == b / 2 && a != b;
            EXPECT_EQ(omega(logicals[a], logicals[b]), paired) << a << "," << b;
        }
    }
}

std::string error_of(std::vector<PauliOp> gens, std::size_t n, std::size_t k) {
    try {
        StabilizerCode::validate(std::move(gens), n, k);
    } catch (const CodeError &e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(Validate, examples) {
    StabilizerCode five = StabilizerCode::validate(ops({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}), 5, 1);
    EXPECT_EQ(five.n(), 5u);
    EXPECT_EQ(five.k(), 1u);
    EXPECT_EQ(error_of(ops({"XX", "ZZ"}), 2, 0), "");
    EXPECT_EQ(error_of(ops({"XI", "XI"}), 2, 0), "dependent generator 1");
    EXPECT_EQ(error_of(ops({"XI", "ZI"}), 2, 0), "not commuting (0,1)");
    EXPECT_NE(error_of(ops({"XI"}), 2, 0), "");
}

TEST(Syndrome, examples) {
    StabilizerCode five = five_qubit_code();
    EXPECT_TRUE(syndrome(five, PauliOp(5)).bits.none());
    // X on the first qubit anticommutes only with ZXIXZ.
    EXPECT_EQ(syndrome(five, PauliOp::single(5, 0, 'X')).bits.str(), "0001");
    EXPECT_THROW(syndrome(five, PauliOp(4)), std::invalid_argument);
}

TEST(Syndrome, invariant_under_stabilizer_multiplication) {
    StabilizerCode five = five_qubit_code();
    for (const auto &e : enumerate_errors(5, 2).elements) {
        for (const auto &g : five.generators()) EXPECT_EQ(syndrome(five, e * g), syndrome(five, e));
    }
}

TEST(Syndrome, equal_iff_product_in_normalizer) {
    Rng rng = trial_rng(31, 0);
    for (std::size_t n = 2; n <= 8; ++n) {
        StabilizerCode code = random_code(n, 1 + uniform_below(rng, n - 1), rng);
        auto errors = enumerate_errors(n, 1).elements;
        for (const auto &e : errors) {
            for (const auto &f : errors) {
                EXPECT_EQ(syndrome(code, e) == syndrome(code, f), in_normalizer(code, e.dagger() * f));
            }
        }
    }
}

TEST(Normalizer, examples) {
    StabilizerCode five = five_qubit_code();
    for (const auto &g : five.generators()) EXPECT_TRUE(in_stabilizer(five, g));
    EXPECT_TRUE(in_stabilizer(five, five.generators()[0] * five.generators()[2]));
    EXPECT_TRUE(in_normalizer(five, five.logical_x(0)));
    EXPECT_FALSE(in_stabilizer(five, five.logical_x(0)));
    EXPECT_FALSE(in_normalizer(five, PauliOp::single(5, 0, 'X')));
}

TEST(LogicalBasis, five_qubit_code) {
    StabilizerCode five = five_qubit_code();
    expect_logical_relations(five);
}

TEST(LogicalBasis, trivial_code_gives_single_qubit_pairs) {
    StabilizerCode trivial = StabilizerCode::validate({}, 3, 3);
    for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_EQ(trivial.logical_x(j), PauliOp::single(3, j, 'X'));
        EXPECT_EQ(trivial.logical_z(j), PauliOp::single(3, j, 'Z'));
    }
}

TEST(LogicalBasis, four_two_and_random_codes) {
    expect_logical_relations(four_two());
    Rng rng = trial_rng(32, 0);
    for (int i = 0; i < 200; ++i) {
        std::size_t n = 2 + uniform_below(rng, 10);
        StabilizerCode code = random_code(n, uniform_below(rng, n), rng);
        expect_logical_relations(code);
        for (const auto &l : code.logicals()) EXPECT_EQ(l, l.hermitian());
    }
}

TEST(LogicalBasis, deterministic) {
    Rng a = trial_rng(33, 0);
    Rng b = trial_rng(33, 0);
    StabilizerCode c1 = random_code(9, 4, a);
    StabilizerCode c2 = random_code(9, 4, b);
    EXPECT_EQ(c1.logicals(), c2.logicals());
}

TEST(LogicalClass, examples) {
    StabilizerCode code = four_two();
    EXPECT_TRUE(logical_class(code, code.generators()[0] * code.generators()[1]).none());
    BitVec x1 = logical_class(code, code.logical_x(0));
    EXPECT_EQ(x1.str(), "1000");
    EXPECT_EQ(logical_class(code, code.logical_z(1)).str(), "0001");
    EXPECT_THROW(logical_class(code, PauliOp::single(4, 0, 'X')), std::invalid_argument);
}

TEST(LogicalClass, additive_and_zero_exactly_on_stabilizer) {
    Rng rng = trial_rng(34, 0);
    StabilizerCode code = random_code(6, 3, rng);
    std::vector<PauliOp> normalizer;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << 12); ++v) {
        PauliOp p = PauliOp::from_symplectic(BitVec::from_uint(v, 12));
        if (in_normalizer(code, p)) normalizer.push_back(p);
    }
    EXPECT_EQ(normalizer.size(), std::size_t{1} << (12 - 3));
    for (const auto &p : normalizer) {
        EXPECT_EQ(logical_class(code, p).none(), in_stabilizer(code, p));
        EXPECT_TRUE(in_stabilizer(code, lift_logical(code, logical_class(code, p)).dagger() * p));
    }
    for (int i = 0; i < 300; ++i) {
        const PauliOp &p = normalizer[uniform_below(rng, normalizer.size())];
        const PauliOp &q = normalizer[uniform_below(rng, normalizer.size())];
        EXPECT_EQ(logical_class(code, p * q), logical_class(code, p) ^ logical_class(code, q));
        EXPECT_EQ(logical_class(code, lift_logical(code, logical_class(code, p))), logical_class(code, p));
    }
}

TEST(RandomCode, single_qubit_generator_frequencies) {
    Rng rng = trial_rng(35, 0);
    std::map<std::string, int> counts;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) counts[random_code(1, 0, rng).generators()[0].hermitian().str()]++;
    ASSERT_EQ(counts.size(), 3u);
    double sigma = std::sqrt(draws * (1.0 / 3) * (2.0 / 3));
    for (const auto &[g, c] : counts) EXPECT_NEAR(c, draws / 3.0, 3 * sigma) << g;
}

TEST(RandomCode, support_matches_exhaustive_count) {
    for (auto [n, k, expected] : {std::tuple{1u, 0u, 3u}, {2u, 1u, 15u}, {2u, 0u, 90u}}) {
        EXPECT_EQ(oracle::count_generating_sets(n, k), expected);
        EXPECT_EQ(oracle::generating_set_formula(n, k), expected);
        Rng rng = trial_rng(36, n * 10 + k);
        std::set<std::vector<std::uint64_t>> seen;
        for (int i = 0; i < 40 * static_cast<int>(expected); ++i) {
            std::vector<std::uint64_t> tuple;
            StabilizerCode code = random_code(n, k, rng);
            for (const auto &g : code.generators()) tuple.push_back(oracle::pack(g));
            seen.insert(tuple);
        }
        EXPECT_EQ(seen.size(), expected) << n << "," << k;
    }
}

TEST(RandomCode, always_valid) {
    Rng rng = trial_rng(37, 0);
    for (int i = 0; i < 1000; ++i) {
        std::size_t n = 1 + uniform_below(rng, 16);
        std::size_t k = uniform_below(rng, n);
        StabilizerCode code = random_code(n, k, rng);
        const auto &gens = code.generators();
        ASSERT_EQ(gens.size(), n - k);
        for (std::size_t a = 0; a < gens.size(); ++a)
            for (std::size_t b = a + 1; b < gens.size(); ++b) ASSERT_FALSE(omega(gens[a], gens[b]));
        ASSERT_EQ(symplectic_rank(gens), n - k);
    }
}

TEST(CodeFile, round_trip) {
    Rng rng = trial_rng(38, 0);
    for (int i = 0; i < 50; ++i) {
        StabilizerCode code = random_code(2 + uniform_below(rng, 8), 1, rng);
        std::string text = write_code(code, i % 2 == 0);
        StabilizerCode back = read_code(text);
        EXPECT_EQ(write_code(back, i % 2 == 0), text);
        EXPECT_EQ(back.generators(), code.generators());
        if (i % 2 == 0) EXPECT_EQ(back.logicals(), code.logicals());
    }
    EXPECT_EQ(write_code(read_code("# comment\n2 0\n\nXX\nZZ\n")), "2 0\nXX\nZZ\n");
    EXPECT_THROW(read_code("2 0\nXX\nZI\n"), CodeError);
}
