// One PASS/FAIL line per primary acceptance criterion; exit status is the
// number of failures.
#include "zpstab/analysis.hpp"
#include "zpstab/classifier.hpp"
#include "zpstab/continuous.hpp"
#include "zpstab/counterexample.hpp"
#include "zpstab/fuzz.hpp"
#include "zpstab/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

using namespace zpstab;

namespace {

int failures = 0;

void report(const char* name, bool ok, const std::string& detail, const char* verdict = nullptr) {
    std::printf("%-5s %s: %s\n", verdict ? verdict : (ok ? "PASS" : "FAIL"), name, detail.c_str());
    std::fflush(stdout);
    failures += !ok;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
void parallel_for(std::size_t count, F&& f) {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned k = std::max(1u, std::thread::hardware_concurrency());
    for (unsigned t = 0; t < k; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < count;) f(i);
        });
    for (auto& th : pool) th.join();
}

// Shared tally for the corpus-wide properties.
struct Tally {
    std::mutex mu;
    std::size_t tables = 0, entries = 0, unbalanced = 0;
    std::size_t ambiguous = 0, short_witness = 0, missing_witness = 0;
    std::optional<std::size_t> min_witness;

    void parity(const Polygon& p, const StabTable& st) {
        std::size_t bad = 0, n = p.size();
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (x != y) bad += !parity_balanced(p, st, x, y);
        std::lock_guard lock(mu);
        ++tables;
        entries += n * (n - 1);
        unbalanced += bad;
    }

    void witnesses(const AnalysisResult& r) {
        std::lock_guard lock(mu);
        missing_witness += r.unexplained.size();
        for (const auto& w : r.witnesses) {
            ++ambiguous;
            short_witness += w.chain.length < 8;
            min_witness = std::min(min_witness.value_or(w.chain.length), w.chain.length);
        }
    }
};

std::size_t misclassified(const AnalysisResult& r, const VisibilityMatrix& v) {
    std::size_t bad = 0;
    for (const auto& c : r.classifications) {
        const auto t = v.at(c.pair.first, c.pair.second);
        if (c.cls == EdgeClass::Internal) bad += t != Visibility::Internal;
        if (c.cls == EdgeClass::External) bad += t != Visibility::External;
        if (c.cls == EdgeClass::Boundary) bad += t != Visibility::Boundary;
    }
    return bad;
}

EdgeClass class_of(const AnalysisResult& r, VertexPair p) {
    for (const auto& c : r.classifications)
        if (c.pair == p) return c.cls;
    return EdgeClass::Boundary;
}

void counterexample_reproduction() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto ce = reconstruct_counterexample();
    const auto rep = verify_zp_equivalence(ce);
    const auto a = stab_table(ce.a), b = stab_table(ce.b);
    const auto va = classify_pair_geometric(ce.a, 0, 8), vb = classify_pair_geometric(ce.b, 0, 8);
    const double dt = seconds_since(t0);
    const bool ok = rep.equal && rep.compared == 198 && a.at(1, 6).tail == 3 && b.at(1, 6).tail == 1 &&
                    a.at(0, 2).head == 3 && b.at(0, 2).head == 5 && va == Visibility::Internal &&
                    vb == Visibility::External && dt < 1.0;
    std::ostringstream d;
    d << "equal=" << rep.equal << " compared=" << rep.compared << " Tail(1,6)=" << a.at(1, 6).tail << "/"
      << b.at(1, 6).tail << " Head(0,2)=" << a.at(0, 2).head << "/" << b.at(0, 2).head
      << " (0,8)=" << to_string(va) << "/" << to_string(vb) << " in " << dt << " s";
    report("counterexample reproduction", ok, d.str());
}

void zp_insufficiency(Tally& tally) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto ce = reconstruct_counterexample();
    const auto ra = analyze(ce.a), rb = analyze(ce.b);
    const double dt = seconds_since(t0);
    tally.witnesses(ra);
    tally.witnesses(rb);
    tally.parity(ce.a, ra.stab);
    tally.parity(ce.b, rb.stab);
    const auto ca = class_of(ra, {0, 8}), cb = class_of(rb, {0, 8});
    std::ostringstream d;
    d << "(0,8) A=" << to_string(ca) << " B=" << to_string(cb) << " in " << dt << " s";
    report("ZP insufficiency", ca == EdgeClass::Ambiguous && cb == EdgeClass::Ambiguous && dt < 1.0, d.str());
}

void classifier_soundness(Tally& tally) {
    const auto t0 = std::chrono::steady_clock::now();
    constexpr std::size_t count = 5000;
    std::atomic<std::size_t> wrong{0}, ambiguous{0}, edges{0};
    parallel_for(count, [&](std::size_t i) {
        const auto p = generate_random_polygon(4 + i % 27, 0x50u + i);
        const auto r = analyze(p);
        wrong += misclassified(r, visibility_oracle(p));
        edges += r.classifications.size();
        for (const auto& c : r.classifications) ambiguous += c.cls == EdgeClass::Ambiguous;
        tally.witnesses(r);
        tally.parity(p, r.stab);
    });
    std::ostringstream d;
    d << count << " polygons, " << edges << " visible pairs, " << wrong << " wrong, " << ambiguous
      << " ambiguous, " << seconds_since(t0) << " s";
    report("classifier soundness", wrong == 0, d.str());
}

void nontriangular_completeness(Tally& tally) {
    const auto t0 = std::chrono::steady_clock::now();
    constexpr std::size_t count = 100;
    std::atomic<std::size_t> wrong{0}, ambiguous{0}, edges{0}, not_nontri{0};
    parallel_for(count, [&](std::size_t i) {
        const auto p = generate_random_polygon(20 + (i * 41) % 41, 0xF16u + i, PolygonStyle::Nontriangular);
        const auto v = visibility_oracle(p);
        not_nontri += !is_nontriangular(p, v, 8);
        const auto r = analyze(p);
        wrong += misclassified(r, v);
        edges += r.classifications.size();
        for (const auto& c : r.classifications) ambiguous += c.cls == EdgeClass::Ambiguous;
        tally.witnesses(r);
        tally.parity(p, r.stab);
    });
    std::ostringstream d;
    d << count << " polygons (n 20..60), " << edges << " visible pairs, " << ambiguous << " ambiguous, "
      << wrong << " wrong, " << seconds_since(t0) << " s";
    report("nontriangular completeness", wrong == 0 && ambiguous == 0 && not_nontri == 0, d.str());
}

void oracle_equivalence(Tally& tally) {
    constexpr std::size_t count = 10000;
    std::atomic<std::size_t> mismatches{0};
    parallel_for(count, [&](std::size_t i) {
        const auto p = generate_random_polygon(3 + i % 28, 0xE0u + i);
        std::mt19937_64 rng(i);
        const std::size_t x = rng() % p.size();
        std::size_t y = rng() % (p.size() - 1);
        if (y >= x) ++y;
        mismatches += !(stab_triple(p, x, y) == brute_stab_triple(p, x, y));
        if (i % 10 == 0) tally.parity(p, brute_stab_table(p));
    });
    std::ostringstream d;
    d << count << " (polygon, pair) instances, " << mismatches << " mismatches";
    report("oracle equivalence", mismatches == 0, d.str());
}

void ambiguous_chain_fuzz(Tally& tally, std::size_t& fuzz_min, bool& fuzz_short) {
    FuzzOptions o;
    o.mode = FuzzMode::AmbiguousChain;
    o.budget = 2000;
    o.n_min = 8;
    o.n_max = 30;
    o.seed = 6;
    o.seeded.push_back(reconstruct_counterexample());
    const auto r = fuzz_campaign(o);
    fuzz_min = r.min_chain_length.value_or(0);
    fuzz_short = r.min_chain_length && *r.min_chain_length < 8;
    std::lock_guard lock(tally.mu);
    tally.ambiguous += r.ambiguous_pairs;
    if (r.min_chain_length)
        tally.min_witness = std::min(tally.min_witness.value_or(*r.min_chain_length), *r.min_chain_length);
}

void pure_parity_collision(Tally& tally) {
    const auto t0 = std::chrono::steady_clock::now();
    FuzzOptions o;
    o.mode = FuzzMode::PureParityCollision;
    o.budget = 100000;
    o.n_min = 4;
    o.n_max = 10;
    o.seed = 1;
    const auto r = fuzz_campaign(o);
    std::size_t reverified = 0;
    for (const auto& f : r.findings) {
        reverified += reverify_finding(finding_from_json(finding_to_json(f)));
        for (const auto& p : f.polygons) tally.parity(p, brute_stab_table(p));
    }
    std::ostringstream d;
    d << r.trials << " trials, " << r.findings.size() << " findings, " << reverified << " re-verified";
    if (!r.findings.empty()) {
        const auto& f = r.findings.front();
        d << "; first: n=" << f.polygons[0].size() << " " << f.properties.dump();
    }
    d << ", " << seconds_since(t0) << " s";
    if (r.findings.empty())
        report("pure-parity insufficiency", true, d.str(), "INCONCLUSIVE");
    else
        report("pure-parity insufficiency", reverified == r.findings.size(), d.str());
}

void continuous_soundness() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto ellipse = ellipse_curve(2000);
    std::mt19937_64 rng(1);
    std::size_t e_total = 0, e_internal = 0;
    while (e_total < 500) {
        const std::size_t x = rng() % ellipse.size(), y = rng() % ellipse.size();
        if (x == y) continue;
        ++e_total;
        e_internal += classify_chord(ellipse, x, y).cls == ChordClass::Internal;
    }
    const auto bean = bean_curve(2000);
    std::size_t visible = 0, classified = 0, agree = 0;
    while (visible < 500) {
        const std::size_t x = rng() % bean.size(), y = rng() % bean.size();
        if (x == y || !chord_visible(bean, x, y)) continue;
        ++visible;
        const auto r = classify_chord(bean, x, y);
        if (r.cls == ChordClass::Unclassifiable) continue;
        ++classified;
        agree += (r.cls == ChordClass::Internal) == chord_midpoint_inside(bean, x, y);
    }
    std::ostringstream d;
    d << "ellipse " << e_internal << "/" << e_total << " Internal; bean " << classified << "/" << visible
      << " classified, " << agree << "/" << classified << " agree with midpoint, " << seconds_since(t0)
      << " s";
    report("continuous ZP soundness",
           e_internal == e_total && classified * 100 >= visible * 95 && agree == classified, d.str());
}

}  // namespace

int main() {
    Tally tally;
    counterexample_reproduction();
    zp_insufficiency(tally);
    classifier_soundness(tally);
    nontriangular_completeness(tally);

    std::size_t fuzz_min = 0;
    bool fuzz_short = false;
    ambiguous_chain_fuzz(tally, fuzz_min, fuzz_short);
    {
        std::ostringstream d;
        d << tally.ambiguous << " ambiguous pairs across corpora, minimum witness length "
          << (tally.min_witness ? std::to_string(*tally.min_witness) : "n/a") << " (fuzz campaign "
          << fuzz_min << "), " << tally.short_witness << " shorter than 8, " << tally.missing_witness
          << " without witness";
        report("Lemma 6 witness length",
               tally.short_witness == 0 && tally.missing_witness == 0 && !fuzz_short, d.str());
    }

    oracle_equivalence(tally);
    pure_parity_collision(tally);
    {
        std::ostringstream d;
        d << tally.tables << " tables, " << tally.entries << " entries, " << tally.unbalanced << " unbalanced";
        report("parity balance", tally.unbalanced == 0, d.str());
    }
    continuous_soundness();
    return failures;
}
