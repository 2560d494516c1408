#include "qlist/protocol.h"

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.h"
#include "qlist/bounds.h"
#include "qlist/rng.h"

using namespace qlist;

namespace {

StabilizerCode four_two() {
    return StabilizerCode::validate({PauliOp::from_string("XXXX"), PauliOp::from_string("ZZZZ")}, 4, 2);
}

BitVec key_of(std::uint64_t value, std::uint64_t bits) { return BitVec::from_uint(value, bits); }

// Unique decoding is possible iff every weight <= t error with the same
// subcode syndrome equals e modulo the subcode stabilizer.
bool oracle_correctable(const StabilizerCode &sub, std::size_t t, const PauliOp &e) {
    Syndrome s = syndrome(sub, e);
    for (const auto &f : enumerate_errors(sub.n(), t).elements) {
        if (syndrome(sub, f) == s && !in_stabilizer(sub, f.dagger() * e)) return false;
    }
    return true;
}

}  // namespace

TEST(Schedule, lengths_and_bias) {
    KeySchedule s = make_schedule(10, 3, 0.5);
    ASSERT_EQ(s.sets.size(), 3u);
    for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_EQ(s.sets[j]->m, 2 * (10 - j));
        EXPECT_LE(s.step_eta[j], 0.5);
        EXPECT_GE(s.step_eta[j], effective_bias(*s.sets[j]));
    }
    EXPECT_EQ(s.eta_eff, *std::max_element(s.step_eta.begin(), s.step_eta.end()));
    EXPECT_THROW(make_schedule(3, 3, 0.5), std::domain_error);
    EXPECT_THROW(make_schedule(3, 1, 0.0), std::domain_error);
    EXPECT_EQ(make_schedule(3, 0, 0.5).key_bits(), 0u);
}

TEST(Schedule, key_accounting_matches_biased_sets) {
    KeySchedule s = make_schedule(10, 3, 0.5);
    std::uint64_t total = 0;
    for (const auto &set : s.sets) {
        EXPECT_EQ(set->key_bits(), ceil_log2(set->size()));
        total += set->key_bits();
    }
    EXPECT_EQ(s.key_bits(), total);
    auto sizes = s.set_sizes();
    EXPECT_EQ(key_bits(20, 0.5, sizes).key_bits, total);
    Rng rng = trial_rng(61, 0);
    KeyedCode kc = augment(random_code(20, 10, rng), 3, BitVec(total), 0.5);
    EXPECT_EQ(kc.schedule().key_bits(), total);
    EXPECT_EQ(kc.payload_qubits(), 7u);
}

TEST(DrawNonzero, falls_back_to_first_nonzero) {
    BiasedSet set = full_space(2);
    EXPECT_EQ(draw_nonzero(set, key_of(0, 2)), BitVec::from_string("10"));
    EXPECT_EQ(draw_nonzero(set, key_of(3, 2)), BitVec::from_string("11"));
}

TEST(ExtendLogical, word_path_matches_bitvec_gram_schmidt) {
    Rng rng = trial_rng(62, 0);
    for (std::size_t k : {2u, 5u, 9u, 20u}) {
        KeySchedule s = make_schedule(k, k - 1, 0.5);
        for (int trial = 0; trial < 20; ++trial) {
            BitVec key = random_bits(rng, s.key_bits());
            LogicalExtension ext = extend_logical(s, key);
            // Reference: the same progressive selection through symplectic_pairs.
            std::vector<std::pair<BitVec, BitVec>> basis;
            for (std::size_t i = 0; i < k; ++i) {
                BitVec x(2 * k), z(2 * k);
                x.set(i, true);
                z.set(k + i, true);
                basis.emplace_back(x, z);
            }
            std::size_t offset = 0;
            for (std::size_t j = 0; j < s.sets.size(); ++j) {
                std::size_t bits = s.sets[j]->key_bits();
                BitVec a = draw_nonzero(*s.sets[j], key.slice(offset, bits));
                offset += bits;
                std::size_t p = basis.size();
                BitVec probe(2 * k);
                for (std::size_t i = 0; i < p; ++i) {
                    if (a.get(i)) probe ^= basis[i].first;
                    if (a.get(p + i)) probe ^= basis[i].second;
                }
                std::vector<BitVec> pool{probe};
                for (const auto &[x, z] : basis) {
                    pool.push_back(x);
                    pool.push_back(z);
                }
                auto pairs = symplectic_pairs(pool);
                ASSERT_EQ(pairs.size(), p);
                ASSERT_EQ(pairs[0].first, probe);
                ASSERT_EQ(ext.probes[j], probe);
                basis.assign(pairs.begin() + 1, pairs.end());
            }
            EXPECT_EQ(ext.payload, basis);
        }
    }
}

TEST(Augment, zero_extra_keeps_base) {
    StabilizerCode base = four_two();
    KeyedCode kc = augment(base, 0, BitVec(0), 0.5);
    EXPECT_EQ(kc.extra_count(), 0u);
    EXPECT_EQ(kc.payload_qubits(), 2u);
    StabilizerCode sub = kc.as_code();
    EXPECT_EQ(sub.generators(), base.generators());
    EXPECT_EQ(sub.k(), 2u);
}

TEST(Augment, four_two_with_one_secret_generator) {
    StabilizerCode base = four_two();
    auto schedule = std::make_shared<const KeySchedule>(make_schedule(2, 1, 0.5));
    for (std::uint64_t key = 0; key < (std::uint64_t{1} << schedule->key_bits()); ++key) {
        KeyedCode kc = augment(base, schedule, key_of(key, schedule->key_bits()));
        ASSERT_EQ(kc.extra_count(), 1u);
        const PauliOp &t1 = kc.extra()[0];
        EXPECT_FALSE(omega(t1, base.generators()[0]));
        EXPECT_FALSE(omega(t1, base.generators()[1]));
        EXPECT_FALSE(in_stabilizer(base, t1));
        StabilizerCode sub = kc.as_code();
        EXPECT_EQ(sub.n(), 4u);
        EXPECT_EQ(sub.k(), 1u);
    }
    EXPECT_THROW(augment(base, 2, BitVec(0), 0.5), std::domain_error);
    EXPECT_THROW(augment(base, schedule, BitVec(1)), std::invalid_argument);
}

TEST(Augment, always_a_valid_subcode) {
    Rng rng = trial_rng(63, 0);
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t n = 3 + uniform_below(rng, 10);
        std::size_t k = 2 + uniform_below(rng, n - 2);
        std::size_t extra = 1 + uniform_below(rng, k - 1);
        KeyedFactory factory(random_code(n, k, rng), extra, 0.5);
        KeyedCode kc = factory.make(random_bits(rng, factory.key_bits()));
        StabilizerCode sub = kc.as_code();
        ASSERT_EQ(sub.k(), k - extra);
        std::vector<PauliOp> all = sub.generators();
        ASSERT_EQ(symplectic_rank(all), n - k + extra);
        for (std::size_t j = 0; j < extra; ++j) EXPECT_EQ(logical_class(kc.base(), kc.extra()[j]), kc.extra_classes()[j]);
    }
}

TEST(FullSyndrome, examples) {
    StabilizerCode base = four_two();
    KeyedFactory factory(base, 1, 0.5);
    Rng rng = trial_rng(64, 0);
    for (int trial = 0; trial < 20; ++trial) {
        KeyedCode kc = factory.make(random_bits(rng, factory.key_bits()));
        FullSyndrome zero = full_syndrome(kc, PauliOp(4));
        EXPECT_TRUE(zero.public_bits.bits.none());
        EXPECT_TRUE(zero.secret_bits.none());
        PauliOp s = base.generators()[0] * base.generators()[1];
        FullSyndrome stab = full_syndrome(kc, s);
        EXPECT_TRUE(stab.public_bits.bits.none());
        EXPECT_TRUE(stab.secret_bits.none());
        for (const auto &e : enumerate_errors(4, 2).elements) {
            EXPECT_EQ(full_syndrome(kc, e * s), full_syndrome(kc, e));
            // The public half never depends on the key.
            EXPECT_EQ(full_syndrome(kc, e).public_bits, syndrome(base, e));
        }
    }
}

TEST(Decode, perfect_code_ignores_secret_bits) {
    StabilizerCode five = five_qubit_code();
    ListTable table = build_table(five, 1);
    KeyedCode kc = augment(five, 0, BitVec(0), 0.5);
    for (const auto &e : enumerate_errors(5, 1).elements) {
        DecodeResult r = decode(kc, table, full_syndrome(kc, e));
        EXPECT_EQ(r.status, DecodeStatus::kUnique);
        EXPECT_EQ(r.consistent, 1u);
        EXPECT_TRUE(run_trial(kc, table, e).success);
    }
}

TEST(Decode, four_two_exhaustive_over_keys) {
    StabilizerCode base = four_two();
    ListTable table = build_table(base, 1);
    KeyedFactory factory(base, 1, 0.5);
    for (const KeyedCode &kc : enumerate_keyed_codes(factory)) {
        StabilizerCode sub = kc.as_code();
        // Classes of X1X2 and X1X3 generate the single-X list.
        BitVec c12 = logical_class(base, PauliOp::from_string("XXII"));
        bool separates = symplectic_form(c12, kc.extra_classes()[0]);
        TrialOutcome x2 = run_trial(kc, table, PauliOp::from_string("IXII"));
        if (separates) {
            EXPECT_EQ(x2.syndrome.secret_bits, full_syndrome(kc, PauliOp::from_string("XIII")).secret_bits ^ BitVec::from_string("1"));
        }
        for (const auto &e : enumerate_errors(4, 1).elements) {
            TrialOutcome o = run_trial(kc, table, e);
            EXPECT_EQ(o.success, oracle_correctable(sub, 1, e)) << e.str() << " key " << kc.key().hex();
            EXPECT_EQ(o.success, o.status == DecodeStatus::kUnique);
        }
        // Four list elements cannot be told apart by one secret bit.
        EXPECT_FALSE(x2.success);
    }
}

TEST(Decode, unique_correction_is_in_the_subcode_stabilizer_class) {
    Rng rng = trial_rng(65, 0);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 4 + uniform_below(rng, 4);
        StabilizerCode base = random_code(n, 2 + uniform_below(rng, 2), rng);
        ListTable table = build_table(base, 1);
        KeyedFactory factory(base, 1, 0.5);
        KeyedCode kc = factory.make(random_bits(rng, factory.key_bits()));
        StabilizerCode sub = kc.as_code();
        for (const auto &e : enumerate_errors(n, 1).elements) {
            DecodeResult r = decode(kc, table, full_syndrome(kc, e));
            ASSERT_NE(r.status, DecodeStatus::kUncorrectable);
            if (r.status == DecodeStatus::kUnique) {
                EXPECT_TRUE(in_stabilizer(sub, r.correction.dagger() * e)) << e.str();
            }
            // Multiplying by a base stabilizer element changes nothing.
            for (const auto &g : base.generators()) {
                DecodeResult r2 = decode(kc, table, full_syndrome(kc, e * g));
                EXPECT_EQ(r2.status, r.status);
                EXPECT_EQ(r2.correction, r.correction);
            }
        }
    }
}

TEST(Decode, rejects_foreign_table) {
    KeyedCode kc = augment(four_two(), 0, BitVec(0), 0.5);
    ListTable other = build_table(five_qubit_code(), 1);
    EXPECT_THROW(decode(kc, other, full_syndrome(kc, PauliOp(4))), std::invalid_argument);
}

TEST(RunTrial, examples) {
    StabilizerCode base = four_two();
    ListTable table = build_table(base, 1);
    KeyedFactory factory(base, 1, 0.5);
    KeyedCode kc = factory.make(BitVec(factory.key_bits()));
    EXPECT_TRUE(run_trial(kc, table, PauliOp(4)).success);
    EXPECT_EQ(run_trial(kc, table, PauliOp::from_string("IZII")).status, DecodeStatus::kAmbiguous);
    EXPECT_THROW(run_trial(kc, table, PauliOp::from_string("XXII")), std::invalid_argument);
}

TEST(Factory, enumerates_full_key_space) {
    KeyedFactory factory(four_two(), 1, 0.5);
    auto ensemble = enumerate_keyed_codes(factory);
    EXPECT_EQ(ensemble.size(), std::size_t{1} << factory.key_bits());
    KeyedFactory big(random_code(30, 10, *std::make_unique<Rng>(trial_rng(66, 0))), 3, 0.5);
    EXPECT_THROW(enumerate_keyed_codes(big), std::domain_error);
}

TEST(Distinguish, trivial_cases) {
    DistinguishResult none = distinguish_experiment(6, 0, 3, 0.5, 500, 1);
    EXPECT_EQ(none.failures, 0u);
    DistinguishResult no_probes = distinguish_experiment(6, 2, 0, 0.5, 500, 1);
    EXPECT_EQ(no_probes.failures, 500u);
    EXPECT_EQ(no_probes.rate, 1.0);
    EXPECT_THROW(distinguish_experiment(4, 5, 1, 0.5, 10, 1), std::domain_error);
    EXPECT_THROW(distinguish_experiment(4, 2, 4, 0.5, 10, 1), std::domain_error);
}

TEST(Distinguish, below_bound_with_per_step_control) {
    DistinguishResult r = distinguish_experiment(12, 2, 11, 0.5, 20000, 7);
    EXPECT_LE(r.eta_eff, 0.5);
    EXPECT_NEAR(r.bound, failure_bound(2, r.eta_eff, 11), 1e-15);
    double sigma = binomial_sigma(std::min(1.0, r.bound), r.trials);
    EXPECT_LE(r.rate, std::min(1.0, r.bound) + 3 * sigma);
    for (const auto &s : r.steps) {
        if (s.given < 30) continue;
        double p = (1 + r.eta_eff) / 2;
        EXPECT_LE(static_cast<double>(s.held) / s.given, p + 3 * binomial_sigma(p, s.given));
    }
}

TEST(Distinguish, independent_of_thread_count) {
    DistinguishResult a = distinguish_experiment(8, 3, 5, 0.5, 3000, 9, 1, true);
    DistinguishResult b = distinguish_experiment(8, 3, 5, 0.5, 3000, 9, 3, true);
    EXPECT_EQ(a.failures, b.failures);
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        EXPECT_EQ(a.records[i].key, b.records[i].key);
        EXPECT_EQ(a.records[i].collision, b.records[i].collision);
    }
    for (std::size_t j = 0; j < a.steps.size(); ++j) EXPECT_EQ(a.steps[j].held, b.steps[j].held);
}
