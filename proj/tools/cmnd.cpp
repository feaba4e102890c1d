// Command-line front end: analyze a CM-type over its abelian CM field, test
// reductions at primes, scan prime ranges, and enumerate all CM-types for a
// small modulus.  All arithmetic is exact; every verdict is computed by two
// independent oracles and a disagreement aborts with a distinct exit code.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "cmnd/charsum.hpp"
#include "cmnd/report.hpp"
#include "cmnd/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitOverflow = 2;
constexpr int kExitInternal = 3;

// Both oracles must agree; a mismatch is a bug, not a user error.
struct InternalInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOpts {
    long modulus = 0;
    std::vector<long> kernel;
    std::string phi_spec;
    bool json_out = false;
    std::string out_path;
    int threads = 0;
};

void apply_threads(int threads) {
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)threads;
#endif
}

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw cmnd::InvalidInput("empty entry in list: " + s);
        size_t pos = 0;
        long v = std::stol(item, &pos);
        if (pos != item.size()) throw cmnd::InvalidInput("not an integer: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw cmnd::InvalidInput("empty list");
    return out;
}

std::vector<long> normalized_kernel(const CommonOpts& opts) {
    std::vector<long> kernel = opts.kernel;
    kernel.push_back(1);
    return kernel;
}

struct CMTypeInput {
    cmnd::CMType phi;
    bool fermat = false;
    std::vector<long> fermat_nonunits;
};

CMTypeInput build_cm_type(const CommonOpts& opts) {
    if (opts.modulus == 0) throw cmnd::InvalidInput("missing --modulus");
    const std::string& spec = opts.phi_spec;
    if (spec.rfind("fermat:", 0) == 0) {
        auto a = parse_long_list(spec.substr(7));
        if (a.size() != 3) throw cmnd::InvalidInput("fermat spec needs exactly three entries");
        auto kernel = normalized_kernel(opts);
        if (kernel.size() != 1)
            throw cmnd::InvalidInput("fermat CM-types live on the full group; drop --kernel");
        CMTypeInput in{cmnd::fermat_cm_type(opts.modulus, a[0], a[1], a[2]), true,
                       cmnd::fermat_nonunit_solutions(opts.modulus, a[0], a[1], a[2])};
        return in;
    }
    if (spec.rfind("list:", 0) == 0) {
        auto raw = parse_long_list(spec.substr(5));
        auto group = cmnd::make_group(opts.modulus, normalized_kernel(opts));
        std::vector<long> elems;
        for (long t : raw) elems.push_back(group->canon(t));
        return CMTypeInput{cmnd::make_cm_type(group, std::move(elems)), false, {}};
    }
    throw cmnd::InvalidInput("--phi must be fermat:a0,a1,a2 or list:t1,t2,...");
}

void write_payload(const CommonOpts& opts, const std::string& payload) {
    if (opts.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw cmnd::InvalidInput("cannot open output file: " + opts.out_path);
    out << payload;
}

cmnd::json input_json(const CommonOpts& opts) {
    cmnd::json j;
    j["modulus"] = opts.modulus;
    j["kernel"] = opts.kernel;
    j["phi"] = opts.phi_spec;
    j["threads"] = opts.threads;
    return j;
}

cmnd::json report_head(const char* command, const CommonOpts& opts) {
    cmnd::json j;
    j["tool"] = cmnd::kToolName;
    j["version"] = cmnd::kToolVersion;
    j["command"] = command;
    j["input"] = input_json(opts);
    return j;
}

std::pair<cmnd::GenericVerdict, cmnd::GenericVerdict> run_generic_oracles(const cmnd::CMType& phi) {
    auto cv = cmnd::character_test(phi);
    auto lv = cmnd::lattice_test(phi);
    bool agree = cv.nondegenerate == lv.nondegenerate &&
                 cv.vanishing_count == lv.vanishing_count && cv.dim_mt == lv.dim_mt &&
                 cv.dim_l == lv.dim_l;
    if (!agree) {
        std::ostringstream os;
        os << "generic oracles disagree:\n"
           << "  character test: nondegenerate=" << cv.nondegenerate
           << " vanishing_count=" << cv.vanishing_count << " dim_L=" << cv.dim_l
           << " dim_MT=" << cv.dim_mt << "\n"
           << "  lattice test:   nondegenerate=" << lv.nondegenerate
           << " vanishing_count=" << lv.vanishing_count << " dim_L=" << lv.dim_l
           << " dim_MT=" << lv.dim_mt;
        throw InternalInconsistency(os.str());
    }
    return {cv, lv};
}

int run_analyze(const CommonOpts& opts) {
    auto in = build_cm_type(opts);
    auto [cv, lv] = run_generic_oracles(in.phi);

    if (opts.json_out) {
        cmnd::json root = report_head("analyze", opts);
        root["group"] = cmnd::group_json(*in.phi.group());
        cmnd::json ct = cmnd::cm_type_json(in.phi);
        if (in.fermat) ct["nonunit_solutions"] = in.fermat_nonunits;
        root["cm_type"] = ct;
        root["generic"] = cmnd::generic_json(cv, lv);
        write_payload(opts, root.dump(2) + "\n");
    } else {
        std::ostringstream os;
        cmnd::print_generic(os, in.phi, cv, lv);
        if (in.fermat && !in.fermat_nonunits.empty()) {
            os << "note: non-unit solutions of the defining sum:";
            for (long t : in.fermat_nonunits) os << " " << t;
            os << "\n";
        }
        write_payload(opts, os.str());
    }
    return kExitOk;
}

struct ReductionRun {
    long p = 0;
    std::string error;  // empty on success
    cmnd::ReductionVerdict char_verdict;
    cmnd::ReductionVerdict lattice_verdict;
    cmnd::ConsistencyReport consistency;
};

ReductionRun run_one_prime(const cmnd::CMType& phi, const cmnd::GenericVerdict& generic, long p) {
    ReductionRun run;
    run.p = p;
    try {
        run.char_verdict = cmnd::character_test(phi, p);
        run.lattice_verdict = cmnd::lattice_test(phi, p);
        if (run.char_verdict.status != run.lattice_verdict.status) {
            std::ostringstream os;
            os << "reduction oracles disagree at p=" << p << ": character test says "
               << to_string(run.char_verdict.status) << ", lattice test says "
               << to_string(run.lattice_verdict.status);
            throw InternalInconsistency(os.str());
        }
        // Consistency of the generic and reduction verdicts, reusing the
        // already-computed pieces.
        run.consistency.p = p;
        run.consistency.generic = generic;
        run.consistency.reduction = run.char_verdict;
        run.consistency.split_case_applies =
            (run.char_verdict.frobenius_order == 1 && generic.primitive);
        if (run.consistency.split_case_applies)
            run.consistency.split_case_ok =
                (generic.nondegenerate ==
                 (run.char_verdict.status == cmnd::ReductionStatus::Nondegenerate));
        run.consistency.persistence_applies = generic.nondegenerate;
        if (run.consistency.persistence_applies)
            run.consistency.persistence_ok =
                (run.char_verdict.status != cmnd::ReductionStatus::Degenerate);
        if (!run.consistency.pass()) {
            std::ostringstream os;
            os << "generic/reduction consistency failed at p=" << p;
            throw InternalInconsistency(os.str());
        }
    } catch (const cmnd::RamifiedPrime&) {
        run.error = "ramified-prime";
    } catch (const cmnd::InvalidInput&) {
        run.error = "not-prime";
    }
    return run;
}

int run_reduce(const CommonOpts& opts, std::vector<long> primes) {
    if (primes.empty()) throw cmnd::InvalidInput("reduce needs at least one -p/--prime");
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    auto in = build_cm_type(opts);
    auto [cv, lv] = run_generic_oracles(in.phi);

    std::vector<ReductionRun> runs;
    for (long p : primes) runs.push_back(run_one_prime(in.phi, cv, p));

    long ok_count = 0;
    for (const auto& r : runs)
        if (r.error.empty()) ++ok_count;

    if (opts.json_out) {
        cmnd::json root = report_head("reduce", opts);
        root["group"] = cmnd::group_json(*in.phi.group());
        root["cm_type"] = cmnd::cm_type_json(in.phi);
        root["generic"] = cmnd::generic_json(cv, lv);
        cmnd::json arr = cmnd::json::array();
        for (const auto& r : runs) {
            if (!r.error.empty())
                arr.push_back({{"p", r.p}, {"error", r.error}});
            else
                arr.push_back(cmnd::reduction_json(r.char_verdict, r.lattice_verdict,
                                                   r.consistency));
        }
        root["reductions"] = arr;
        write_payload(opts, root.dump(2) + "\n");
    } else {
        std::ostringstream os;
        cmnd::print_generic(os, in.phi, cv, lv);
        for (const auto& r : runs) {
            if (!r.error.empty())
                os << "p = " << r.p << ": error (" << r.error << ")\n";
            else
                cmnd::print_reduction(os, r.char_verdict, r.consistency);
        }
        write_payload(opts, os.str());
    }
    return ok_count > 0 ? kExitOk : kExitInvalid;
}

int run_scan(const CommonOpts& opts, const std::string& range) {
    auto dots = range.find("..");
    if (dots == std::string::npos)
        throw cmnd::InvalidInput("--primes expects a range like 2..200");
    long lo = std::stol(range.substr(0, dots));
    long hi = std::stol(range.substr(dots + 2));
    if (lo > hi) {
        std::cerr << "error: empty prime range " << range << "\n";
        return kExitInvalid;
    }

    auto in = build_cm_type(opts);

    std::vector<long> primes;
    for (long p = std::max(lo, 2L); p <= hi; ++p)
        if (cmnd::is_prime(p) && opts.modulus % p != 0) primes.push_back(p);

    std::vector<cmnd::ReductionVerdict> rows(primes.size());
    std::vector<std::exception_ptr> errors(primes.size());
    const long count = static_cast<long>(primes.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            rows[static_cast<size_t>(i)] =
                cmnd::character_test(in.phi, primes[static_cast<size_t>(i)]);
        } catch (...) {
            errors[static_cast<size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    std::ostringstream os;
    os << cmnd::csv_header() << "\r\n";
    std::map<std::string, long> tally;
    for (const auto& v : rows) {
        os << cmnd::csv_row(opts.modulus, v) << "\r\n";
        ++tally[to_string(v.status)];
    }
    write_payload(opts, os.str());

    std::ostringstream summary;
    summary << "scanned " << rows.size() << " primes:";
    for (const auto& [status, n] : tally) summary << " " << status << "=" << n;
    std::cerr << summary.str() << "\n";
    return kExitOk;
}

int run_enumerate(const CommonOpts& opts, bool up_to_translation) {
    if (opts.modulus == 0) throw cmnd::InvalidInput("missing --modulus");
    auto group = cmnd::make_group(opts.modulus, normalized_kernel(opts));
    if (group->order() > 24) {
        std::cerr << "error: |G| = " << group->order()
                  << " is too large to enumerate (2^" << group->order() / 2
                  << " CM-types); bound is |G| <= 24\n";
        return kExitInvalid;
    }

    // Conjugate pairs {g, iota*g} in ascending order of the smaller member.
    std::vector<std::pair<long, long>> pairs;
    std::vector<char> seen(static_cast<size_t>(group->order()), 0);
    for (long g : group->elements()) {
        if (seen[static_cast<size_t>(group->index_of(g))]) continue;
        long ig = group->mul(group->iota(), g);
        seen[static_cast<size_t>(group->index_of(g))] = 1;
        seen[static_cast<size_t>(group->index_of(ig))] = 1;
        pairs.emplace_back(g, ig);
    }

    struct Entry {
        std::vector<long> elements;
        bool primitive = false;
        bool nondegenerate = false;
        long vanishing_count = 0;
    };
    std::vector<Entry> entries;
    long total = 1L << pairs.size();
    long classes = 0;
    for (long mask = 0; mask < total; ++mask) {
        std::vector<long> elems;
        for (size_t i = 0; i < pairs.size(); ++i)
            elems.push_back((mask >> i) & 1 ? pairs[i].second : pairs[i].first);
        auto phi = cmnd::make_cm_type(group, std::move(elems));

        if (up_to_translation) {
            // Keep only the lexicographically smallest translate.
            bool minimal = true;
            for (long g : group->elements()) {
                if (g == 1) continue;
                if (cmnd::translate(phi, g).elements() < phi.elements()) {
                    minimal = false;
                    break;
                }
            }
            if (!minimal) continue;
            ++classes;
        }

        auto [cv, lv] = run_generic_oracles(phi);
        entries.push_back(Entry{phi.elements(), cv.primitive, cv.nondegenerate,
                                cv.vanishing_count});
    }

    long n_primitive = 0, n_degenerate = 0;
    for (const auto& e : entries) {
        if (e.primitive) ++n_primitive;
        if (!e.nondegenerate) ++n_degenerate;
    }

    if (opts.json_out) {
        cmnd::json root = report_head("enumerate", opts);
        root["group"] = cmnd::group_json(*group);
        root["cm_types_total"] = total;
        root["up_to_translation"] = up_to_translation;
        if (up_to_translation) root["translation_classes"] = classes;
        cmnd::json arr = cmnd::json::array();
        for (const auto& e : entries)
            arr.push_back({{"elements", e.elements},
                           {"primitive", e.primitive},
                           {"nondegenerate", e.nondegenerate},
                           {"vanishing_count", e.vanishing_count}});
        root["entries"] = arr;
        root["counts"] = {{"listed", static_cast<long>(entries.size())},
                          {"primitive", n_primitive},
                          {"imprimitive", static_cast<long>(entries.size()) - n_primitive},
                          {"degenerate", n_degenerate},
                          {"nondegenerate", static_cast<long>(entries.size()) - n_degenerate}};
        write_payload(opts, root.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "modulus " << opts.modulus << ": " << total << " CM-types";
        if (up_to_translation) os << ", " << classes << " translation classes";
        os << "\n";
        for (const auto& e : entries) {
            os << " ";
            for (long t : e.elements) os << " " << t;
            os << "  " << (e.nondegenerate ? "nondegenerate" : "degenerate");
            if (!e.primitive) os << " (imprimitive)";
            if (e.vanishing_count) os << " vanishing=" << e.vanishing_count;
            os << "\n";
        }
        os << "listed " << entries.size() << ": " << n_primitive << " primitive, "
           << entries.size() - n_primitive << " imprimitive; " << n_degenerate << " degenerate, "
           << entries.size() - n_degenerate << " nondegenerate\n";
        write_payload(opts, os.str());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nondegeneracy analyzer for CM abelian varieties and their reductions"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::vector<long> primes;
    std::string range;
    bool up_to_translation = false;

    auto add_common = [&](CLI::App* sub, bool needs_phi) {
        sub->add_option("-m,--modulus", opts.modulus, "conductor m of the cyclotomic field")
            ->required();
        sub->add_option("--kernel", opts.kernel,
                        "subgroup H of (Z/mZ)^x cutting out the CM field (comma separated)")
            ->delimiter(',');
        auto* phi =
            sub->add_option("--phi", opts.phi_spec, "CM-type: fermat:a0,a1,a2 or list:t1,t2,...");
        if (needs_phi) phi->required();
        sub->add_flag("--json", opts.json_out, "emit a JSON report");
        sub->add_option("--out", opts.out_path, "write the report to a file");
        sub->add_option("--threads", opts.threads, "worker threads (0 = default)");
    };

    auto* analyze = app.add_subcommand("analyze", "decide nondegeneracy of the generic fiber");
    add_common(analyze, true);

    auto* reduce = app.add_subcommand("reduce", "decide nondegeneracy of reductions at primes");
    add_common(reduce, true);
    reduce->add_option("-p,--prime", primes, "prime of reduction (repeatable)")
        ->delimiter(',')
        ->required();

    auto* scan = app.add_subcommand("scan", "CSV scan of a prime range");
    add_common(scan, true);
    scan->add_option("--primes", range, "prime range LO..HI")->required();

    auto* enumerate = app.add_subcommand("enumerate", "all CM-types for a small modulus");
    add_common(enumerate, false);
    enumerate->add_flag("--up-to-translation", up_to_translation,
                        "one representative per translation class");

    CLI11_PARSE(app, argc, argv);
    apply_threads(opts.threads);

    try {
        if (app.got_subcommand(analyze)) return run_analyze(opts);
        if (app.got_subcommand(reduce)) return run_reduce(opts, primes);
        if (app.got_subcommand(scan)) return run_scan(opts, range);
        if (app.got_subcommand(enumerate)) return run_enumerate(opts, up_to_translation);
    } catch (const cmnd::NotACMType& e) {
        std::cerr << "error: " << e.what() << " (witness element " << e.witness << ")\n";
        return kExitInvalid;
    } catch (const cmnd::OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOverflow;
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInternal;
    } catch (const cmnd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitOk;
}
