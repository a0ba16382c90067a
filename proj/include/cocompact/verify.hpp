#pragma once

#include "io.hpp"

#include <string>
#include <vector>

namespace cocompact {

struct check_report {
    std::string name;
    bool pass = false;
    json details;
};

// Cover-algebra facts and the interval/boolean laws under one seeded run.
inline check_report verify_facts(std::uint64_t seed, std::size_t cases) {
    sampler rng(seed);
    std::size_t failures = 0;
    json first_failure;
    const auto record = [&](bool ok, const char* what) {
        if (!ok) {
            ++failures;
            if (first_failure.is_null()) first_failure = what;
        }
    };

    for (std::size_t t = 0; t < cases; ++t) {
        // interval algebra
        const interval_set a = rng.open_set(), b = rng.open_set(), c = rng.open_set();
        record(interval_set::normalize(a.intervals()) == a, "normalize idempotent");
        record(intersect(a, set_union(b, c)) == set_union(intersect(a, b), intersect(a, c)), "distributivity");
        record(complement(set_union(a, b)) == closed_intersect(complement(a), complement(b)), "de morgan");
        const interval_set ca = rng.cocompact_set(), cb = rng.cocompact_set();
        record(is_cocompact(intersect(ca, cb)), "meet of co-compact sets");
        record(is_cocompact(set_union(ca, cb)), "union of co-compact sets");
        const rational x = rng.rational_in(-12, 12);
        record(a.contains_point(x) == (dist_to_complement(a, x) > ext_rational(rational(0))),
               "membership vs distance");

        // cover relations on small random covers
        if (t % 8 == 0) {
            const finite_cover u = rng.cocompact_cover(3, 4);
            const finite_cover v = rng.cocompact_cover(3, 4);
            const finite_cover uv = join(u, v);
            record(refines(u, uv), "join refines the first factor");
            record(refines(v, uv), "join refines the second factor");
            const auto sub = minimal_subcover(u);
            std::vector<interval_set> chosen;
            for (auto i : sub.witness) chosen.push_back(u[i]);
            record(refines(u, finite_cover(u.ambient(), chosen)), "subcover is refined by its cover");
            record(witness_covers(u, sub.witness), "finite subcover witness covers the space");
            const std::size_t nu = sub.size, nv = minimal_subcover(v).size;
            record(minimal_subcover_size(uv) <= nu * nv, "join subadditivity of N");
            bool has_whole = false;
            for (const auto& e : u.elements()) has_whole = has_whole || e.is_whole_line();
            record((nu == 1) == has_whole, "N = 1 iff the whole space is an element");
            const finite_cover w = join(u, rng.cocompact_cover(3, 4));
            record(refines(u, w) && nu <= minimal_subcover_size(w), "refinement never lowers N");
            const piecewise_affine f = rng.perfect_map();
            const std::size_t npb = minimal_subcover_size(pullback(f, u));
            record(npb <= nu, "pullback does not raise N");
            record(minimal_subcover_size(pullback(piecewise_affine::doubling(), u)) == nu,
                   "pullback preserves N for surjective maps");
            record(pullback(f, u).all_cocompact(), "perfect pullback stays co-compact");
        }
    }

    check_report rep;
    rep.name = "facts";
    rep.pass = failures == 0;
    rep.details = json{{"cases", cases}, {"seed", seed}, {"failures", failures}};
    if (!first_failure.is_null()) rep.details["first_failure"] = first_failure;
    return rep;
}

// a_n subadditivity (the inequality behind the existence of the limit) on a
// spread of systems.
inline check_report verify_subadditivity(std::uint64_t seed, std::size_t systems) {
    sampler rng(seed);
    bool pass = true;
    std::size_t checked = 0;
    for (std::size_t t = 0; t < systems; ++t) {
        const piecewise_affine f = rng.perfect_map();
        const finite_cover u = rng.cocompact_cover(3, 4);
        const auto seq = compute_entropy_sequence(f, u, 6);
        for (std::size_t i = 0; i < seq.rows.size(); ++i)
            for (std::size_t j = 0; i + j + 1 < seq.rows.size(); ++j) {
                pass = pass && seq.rows[i + j + 1].subcover_size <=
                                   seq.rows[i].subcover_size * seq.rows[j].subcover_size;
                ++checked;
            }
    }
    check_report rep;
    rep.name = "subadditivity";
    rep.pass = pass;
    rep.details = json{{"systems", systems}, {"pairs_checked", checked}, {"seed", seed}};
    return rep;
}

// Identity map: the pullback chain is constant, so a_n = a_1 for every cover.
inline check_report verify_identity_map(std::uint64_t seed, std::size_t covers) {
    sampler rng(seed);
    bool pass = true;
    for (std::size_t t = 0; t < covers; ++t) {
        const auto seq = compute_entropy_sequence(piecewise_affine::identity(), rng.cocompact_cover(), 6);
        for (const auto& r : seq.rows) pass = pass && r.subcover_size == seq.rows.front().subcover_size;
    }
    check_report rep;
    rep.name = "identity";
    rep.pass = pass;
    rep.details = json{{"covers", covers}, {"seed", seed}};
    return rep;
}

inline check_report verify_power_theorem(std::size_t n_cap = 12) {
    const finite_cover tent_cover(space::compact(rational(0), rational(1)),
                                  {interval_set::of(rational(-1), rational(3, 5)),
                                   interval_set::of(rational(2, 5), rational(2))});
    sequence_options opts;
    opts.subcover.exact_threshold = 8192;
    json details = json::array();
    bool pass = true;
    for (std::size_t m : {2u, 3u}) {
        const auto rep = verify_power(piecewise_affine::tent(), tent_cover, m, n_cap / m, 0.05, opts);
        pass = pass && rep.pass;
        details.push_back(json{{"map", "tent"}, {"report", to_json(rep)}});
    }
    const auto fam = cover_family(space::real_line());
    const auto dbl = verify_power(piecewise_affine::doubling(), fam[0], 2, n_cap / 2);
    pass = pass && dbl.pass;
    details.push_back(json{{"map", "doubling"}, {"report", to_json(dbl)}});
    check_report out;
    out.name = "power";
    out.pass = pass;
    out.details = std::move(details);
    return out;
}

inline check_report verify_subsystem_theorem(std::size_t n_max = 10) {
    const compact_interval unit(rational(0), rational(1));
    const finite_cover tent_cover(space::compact(unit),
                                  {interval_set::of(rational(-1), rational(3, 5)),
                                   interval_set::of(rational(2, 5), rational(2))});
    sequence_options opts;
    opts.subcover.exact_threshold = 8192;
    const auto rep = verify_subsystem(piecewise_affine::tent(), unit, tent_cover, n_max, opts);
    check_report out;
    out.name = "subsystem";
    out.pass = rep.pass;
    out.details = to_json(rep);
    return out;
}

inline check_report verify_conjugacy_theorem(std::size_t n_max = 12) {
    const auto fam = cover_family(space::real_line());
    const auto rep = verify_conjugacy(piecewise_affine::doubling(), piecewise_affine::linear(2, -1),
                                      piecewise_affine::linear(1, 1), fam, n_max);
    check_report out;
    out.name = "conjugacy";
    out.pass = rep.pass;
    out.details = to_json(rep);
    return out;
}

// Lebesgue theorem: every generated co-compact cover yields delta > 0 passing
// seeded containment trials.
inline check_report verify_lebesgue_theorem(std::uint64_t seed, std::size_t covers, std::size_t trials) {
    sampler rng(seed);
    bool pass = true;
    std::size_t positive = 0;
    for (std::size_t t = 0; t < covers; ++t) {
        const finite_cover u = rng.cocompact_cover();
        const ext_rational delta = lebesgue_number(u);
        const bool pos = ext_rational(rational(0)) < delta;
        positive += pos;
        pass = pass && pos && verify_lebesgue(u, delta, trials, seed + 7919 * t);
    }
    check_report out;
    out.name = "lebesgue";
    out.pass = pass;
    out.details = json{{"covers", covers}, {"trials_per_cover", trials}, {"positive_delta", positive},
                       {"seed", seed}};
    return out;
}

inline check_report verify_bound_theorem(std::size_t n_max = 8) {
    json details = json::array();
    bool pass = true;

    const auto fam = cover_family(space::real_line());
    for (const auto& u : fam) {
        const auto rep = check_spanning_cover_bound(piecewise_affine::doubling(), u, n_max);
        pass = pass && rep.pass;
        details.push_back(json{{"map", "doubling"}, {"report", to_json(rep)}});
    }

    const finite_cover tent_cover(
        space::real_line(),
        {interval_set::normalize({{endpoint::neg_inf(), endpoint(rational(3, 5))}, {endpoint(1), endpoint::pos_inf()}}),
         interval_set::normalize({{endpoint::neg_inf(), endpoint(0)}, {endpoint(rational(2, 5)), endpoint::pos_inf()}}),
         interval_set::normalize({{endpoint::neg_inf(), endpoint(rational(-1, 2))},
                                  {endpoint(rational(1, 4)), endpoint::pos_inf()}})});
    sequence_options opts;
    opts.subcover.exact_threshold = 8192;
    const auto rep = check_spanning_cover_bound(piecewise_affine::tent(), tent_cover, n_max, {}, opts);
    pass = pass && rep.pass;
    details.push_back(json{{"map", "tent"}, {"report", to_json(rep)}});

    check_report out;
    out.name = "bound";
    out.pass = pass;
    out.details = std::move(details);
    return out;
}

// c(f) <= h_d(f) on shared systems, within combined tolerance. The fekete
// value at finite depth carries a start-up term of up to log(N_1)/n_max that
// the Bowen slope estimator does not (for the identity map the whole finite
// value is that term), so the comparison subtracts it.
inline check_report verify_bowen_dominates(double tol = 0.05) {
    json details = json::array();
    bool pass = true;

    const auto run = [&](const char* name, const piecewise_affine& f, const entropy_sequence& seq,
                         const compact_interval& k) {
        const auto est = compute_entropy_estimate(seq);
        const double start_up =
            seq.rows.front().log_count / static_cast<double>(seq.rows.back().n);
        const auto bowen = compute_bowen_estimate(f, k, {rational(1, 16), rational(1, 64)}, 4, 10);
        const bool ok = est.value - start_up <= bowen.value + tol;
        pass = pass && ok;
        details.push_back(json{{"system", name},
                               {"cocompact", est.value},
                               {"start_up", start_up},
                               {"bowen", bowen.value},
                               {"ok", ok}});
    };

    const auto fam = cover_family(space::real_line());
    const compact_interval unit(rational(0), rational(1));
    run("doubling", piecewise_affine::doubling(),
        compute_entropy_sequence(piecewise_affine::doubling(), fam[0], 12), unit);
    run("identity", piecewise_affine::identity(),
        compute_entropy_sequence(piecewise_affine::identity(), fam[0], 12), unit);

    // tent on its invariant core, against a fine relative-open cover
    std::vector<interval_set> elems;
    for (int j = 0; j < 8; ++j)
        elems.push_back(interval_set::of(rational(j, 8) - rational(1, 64), rational(j + 1, 8) + rational(1, 64)));
    const finite_cover fine(space::compact(unit), elems);
    sequence_options opts;
    opts.subcover.exact_threshold = 8192;
    run("tent", piecewise_affine::tent(), compute_entropy_sequence(piecewise_affine::tent(), fine, 8, opts),
        unit);

    check_report out;
    out.name = "bowen-dominates";
    out.pass = pass;
    out.details = std::move(details);
    return out;
}

// Bowen values change with the metric while cover counts cannot: under the
// snapped metric min(|x-y|, 1) any eps >= 1 sees a single ball. Demonstration
// data, not an assertion about equality.
inline check_report metric_dependence_demo() {
    const auto dbl = piecewise_affine::doubling();
    const compact_interval k(rational(0), rational(2));
    const rational eps(5, 4);
    const rational step(1, 8);
    const auto pts = [&] {
        std::vector<rational> out;
        for (rational x = k.lo; x <= k.hi; x += step) out.push_back(x);
        return out;
    }();
    const auto count_with = [&](auto metric) {
        std::vector<char> covered(pts.size(), 0);
        std::size_t count = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            if (covered[i]) continue;
            ++count;
            for (std::size_t j = 0; j < pts.size(); ++j)
                if (!covered[j] && metric(pts[i], pts[j]) <= eps) covered[j] = 1;
        }
        return count;
    };
    const std::size_t euclid = count_with([&](const rational& a, const rational& b) {
        return dn_metric(dbl, a, b, 4);
    });
    const std::size_t snapped = count_with([&](const rational& a, const rational& b) {
        rational d = dn_metric(dbl, a, b, 4);
        return d < rational(1) ? d : rational(1);
    });
    check_report out;
    out.name = "metric-dependence";
    out.pass = true;  // informational
    out.details = json{{"eps", eps.str()}, {"euclidean_count", euclid}, {"snapped_count", snapped},
                       {"differ", euclid != snapped}};
    return out;
}

}  // namespace cocompact
