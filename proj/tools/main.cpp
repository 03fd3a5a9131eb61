#include "ech2q/ellipsoid.hpp"
#include "ech2q/exact.hpp"
#include "ech2q/index.hpp"
#include "ech2q/io.hpp"
#include "ech2q/orbits.hpp"
#include "ech2q/spectral.hpp"

#include "CLI11.hpp"

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace ech2q;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

io::Format resolve_format(const std::string& flag) {
    if (flag.empty()) return io::default_format();
    if (auto f = io::parse_format(flag)) return *f;
    throw std::invalid_argument("unknown format '" + flag + "' (expected tsv, json or md)");
}

Fibration parse_fibration(const std::string& q_text) {
    return Fibration(io::parse_int(q_text));
}

std::size_t parse_count(const std::string& text, const char* what) {
    Int v = io::parse_int(text);
    if (v < 0 || v > 100000000) throw std::invalid_argument(std::string(what) + " out of range");
    return static_cast<std::size_t>(v);
}

ReebCurrent parse_current(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    if (parts.size() != 3) throw std::invalid_argument("--gen expects B,H,E");
    ReebCurrent c(io::parse_int(parts[0]), io::parse_int(parts[1]), io::parse_int(parts[2]));
    if (c.B < 0 || c.H < 0 || c.E < 0) throw std::invalid_argument("multiplicities must be >= 0");
    return c;
}

int cmd_gens(const std::string& q_text, const std::string& degree_text,
             const std::string& format_flag) {
    Fibration fib = parse_fibration(q_text);
    Int max_degree = io::parse_int(degree_text);
    if (max_degree < 0) throw std::invalid_argument("--max-degree must be >= 0");

    io::Format format = resolve_format(format_flag);
    io::OutputRecord record;
    record.command = "gens";
    record.params = {{"q", fib.q().str()}, {"max_degree", max_degree.str()}};
    if (format == io::Format::json) {
        // machine form: powers as typed fields, zeros for the empty current
        record.columns = {"degree", "B", "H", "E", "index"};
        for (const ReebCurrent& c : enumerate_generators(fib, max_degree))
            record.rows.push_back({degree(fib, c).str(), c.B.str(), c.H.str(), c.E.str(),
                                   ech_index(fib, c).str()});
    } else {
        record.columns = {"degree", "generator", "index"};
        for (const ReebCurrent& c : enumerate_generators(fib, max_degree))
            record.rows.push_back(
                {degree(fib, c).str(), io::render_current(c), ech_index(fib, c).str()});
    }
    std::cout << io::emit(record, format);
    return 0;
}

int cmd_index(const std::string& q_text, const std::string& gen_text, bool with_components,
              const std::string& format_flag) {
    Fibration fib = parse_fibration(q_text);
    ReebCurrent c = parse_current(gen_text);

    io::OutputRecord record;
    record.command = "index";
    record.params = {{"q", fib.q().str()},
                     {"B", c.B.str()},
                     {"H", c.H.str()},
                     {"E", c.E.str()}};
    record.columns = {"index"};
    std::vector<std::string> row{ech_index(fib, c).str()};
    if (with_components) {
        IndexComponents parts = ech_index_components(fib, c);
        record.columns.insert(record.columns.end(), {"c", "Q", "CZ"});
        row.insert(row.end(), {parts.c.str(), parts.q.str(), parts.cz.str()});
    }
    if (!c.admissible()) {
        record.columns.push_back("warning");
        row.push_back("non-admissible");
    }
    record.rows.push_back(std::move(row));
    std::cout << io::emit(record, resolve_format(format_flag));
    return 0;
}

int cmd_spectrum(const std::string& q_text, const std::string& count_text,
                 const std::string& format_flag) {
    Fibration fib = parse_fibration(q_text);
    std::size_t count = parse_count(count_text, "--count");
    if (count < 1) throw std::invalid_argument("--count must be >= 1");

    io::OutputRecord record;
    record.command = "spectrum";
    record.params = {{"q", fib.q().str()}, {"count", Int(count).str()}};
    record.columns = {"k", "c_k", "generator"};
    for (const SpectrumEntry& entry : ech_spectrum(fib, count))
        record.rows.push_back({Int(entry.k).str(), io::render_rational(entry.c),
                               io::render_current(entry.witness.current)});
    std::cout << io::emit(record, resolve_format(format_flag));
    return 0;
}

int cmd_knot(const std::string& q_text, const std::string& grading_text,
             const std::string& k_text, const std::string& rot_text,
             const std::string& format_flag) {
    Fibration fib = parse_fibration(q_text);
    Int grading = io::parse_int(grading_text);
    if (grading > 200000000) throw std::invalid_argument("--grading out of supported range");
    Perturbed level = io::parse_perturbed(k_text);
    RotMode mode;
    if (rot_text == "exact")
        mode = RotMode::exact;
    else if (rot_text == "perturbed")
        mode = RotMode::perturbed;
    else
        throw std::invalid_argument("--rot expects 'exact' or 'perturbed'");

    io::OutputRecord record;
    record.command = "knot";
    record.params = {{"q", fib.q().str()},
                     {"grading", grading.str()},
                     {"K", io::render_perturbed(level)},
                     {"rot", rot_text}};
    record.columns = {"rank", "threshold"};

    std::string threshold = "-";  // odd and negative gradings carry no generator
    if (grading >= 0 && grading % 2 == 0) {
        auto k = static_cast<std::size_t>(grading / 2);
        threshold = io::render_perturbed(knot_threshold(graded_complex(fib, k)[k], mode));
    }
    int rank = knot_filtered_group(fib, grading, level, mode);
    record.rows.push_back({std::to_string(rank), threshold});
    std::cout << io::emit(record, resolve_format(format_flag));
    return 0;
}

struct VerifyOutcome {
    bool ok = true;

    void report(bool pass, const std::string& what, const std::string& detail = "") {
        ok = ok && pass;
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << what << '\n';
        if (!pass && !detail.empty()) std::cout << "       " << detail << '\n';
    }
};

int cmd_verify(const std::string& q_list, const std::string& degree_text,
               const std::string& max_m_text, const std::string& count_text, bool corrupt) {
    Int max_degree = io::parse_int(degree_text);
    Int max_m = io::parse_int(max_m_text);
    std::size_t count = parse_count(count_text, "--count");
    if (max_degree < 0 || max_m < 1 || count < 1)
        throw std::invalid_argument("verify: bounds out of range");

    std::vector<Fibration> fibs;
    std::stringstream ss(q_list);
    std::string item;
    while (std::getline(ss, item, ',')) fibs.push_back(parse_fibration(item));
    if (fibs.empty()) throw std::invalid_argument("verify: empty q list");

    VerifyOutcome outcome;
    for (const Fibration& fib : fibs) {
        const std::string tag = "q=" + fib.q().str();

        // Optional corruption fixtures prove the harness can fail: the index
        // of e^q is shifted by two and one spectrum entry is displaced.
        IndexFn index_fn;
        SpectrumMutator mutator;
        if (corrupt) {
            ReebCurrent target(0, 0, fib.q());
            index_fn = [target](const Fibration& f, const ReebCurrent& c) {
                Int value = ech_index(f, c);
                return c == target ? value + 2 : value;
            };
            mutator = [&fib](std::size_t k, const Rational& c) {
                return k == 1 ? c + Rational(1, 2 * fib.q()) : c;
            };
        }

        VerifyReport identities = verify_identities(fib, max_m, 4, index_fn);
        outcome.report(identities.pass, tag + " adjacent-degree and within-degree identities",
                       identities.failures.empty() ? "" : identities.failures.front().detail);

        std::vector<Int> defects = bijection_defects(fib, max_degree, index_fn);
        std::string detail;
        if (!defects.empty()) detail = "first offending grading " + defects.front().str();
        outcome.report(defects.empty(), tag + " index bijection onto 0,2,4,...", detail);

        bool components_ok = true;
        std::string comp_detail;
        for (const ReebCurrent& c : enumerate_generators(fib, max_degree)) {
            IndexComponents parts = ech_index_components(fib, c);
            Int direct = index_fn ? index_fn(fib, c) : ech_index(fib, c);
            if (parts.sum() != direct || total_cz(fib, c) != total_cz_by_iterates(fib, c)) {
                components_ok = false;
                std::ostringstream os;
                os << "current " << c << ": closed form " << direct << ", components "
                   << parts.sum();
                comp_detail = os.str();
                break;
            }
        }
        outcome.report(components_ok, tag + " component sums and iterate sums", comp_detail);

        CrosscheckReport crosscheck = crosscheck_spectrum(fib, count, mutator);
        outcome.report(crosscheck.pass, tag + " spectrum against staircase",
                       crosscheck.failures.empty() ? "" : crosscheck.failures.front().detail);
    }
    return outcome.ok ? 0 : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorial ECH data of torus-knot fibrations of the 3-sphere"};
    app.require_subcommand(1);

    std::string q_text, degree_text, gen_text, count_text, grading_text, k_text;
    std::string rot_text = "exact";
    std::string format_flag;
    std::string max_m_text = "50";
    bool with_components = false;
    bool corrupt = false;

    std::function<int()> run;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_flag, "Output format: tsv, json or md");
    };

    CLI::App* gens = app.add_subcommand("gens", "List generators by degree and ECH index");
    gens->add_option("--q", q_text, "Odd torus-knot parameter q >= 3")->required();
    gens->add_option("--max-degree", degree_text, "Largest degree to list")->required();
    add_format(gens);
    gens->callback([&] { run = [&] { return cmd_gens(q_text, degree_text, format_flag); }; });

    CLI::App* index_cmd = app.add_subcommand("index", "ECH index of a current b^B h^H e^E");
    index_cmd->add_option("--q", q_text, "Odd torus-knot parameter q >= 3")->required();
    index_cmd->add_option("--gen", gen_text, "Multiplicities B,H,E")->required();
    index_cmd->add_flag("--components", with_components, "Also print (c, Q, CZ)");
    add_format(index_cmd);
    index_cmd->callback(
        [&] { run = [&] { return cmd_index(q_text, gen_text, with_components, format_flag); }; });

    CLI::App* spectrum = app.add_subcommand("spectrum", "ECH spectrum c_0..c_{count-1}");
    spectrum->add_option("--q", q_text, "Odd torus-knot parameter q >= 3")->required();
    spectrum->add_option("--count", count_text, "Number of capacities")->required();
    add_format(spectrum);
    spectrum->callback(
        [&] { run = [&] { return cmd_spectrum(q_text, count_text, format_flag); }; });

    CLI::App* knot = app.add_subcommand("knot", "Knot-filtered group rank at level K");
    knot->add_option("--q", q_text, "Odd torus-knot parameter q >= 3")->required();
    knot->add_option("--grading", grading_text, "Homological grading")->required();
    knot->add_option("--K", k_text, "Filtration level, e.g. 6, 6+δ, 13/2-2d")->required();
    knot->add_option("--rot", rot_text, "Rotation convention: exact or perturbed");
    add_format(knot);
    knot->callback([&] {
        run = [&] { return cmd_knot(q_text, grading_text, k_text, rot_text, format_flag); };
    });

    CLI::App* verify = app.add_subcommand("verify", "Run the full verification harness");
    verify->add_option("--q", q_text, "Comma-separated odd q values")->required();
    verify->add_option("--max-degree", degree_text, "Degree bound for enumeration checks")
        ->required();
    verify->add_option("--max-m", max_m_text, "Band bound for the identity families");
    verify->add_option("--count", count_text, "Spectrum entries to cross-check")->required();
    verify->add_flag("--self-test-corrupt", corrupt,
                     "Inject an off-by-two corruption to prove harness sensitivity");
    verify->callback([&] {
        run = [&] { return cmd_verify(q_text, degree_text, max_m_text, count_text, corrupt); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        return run();
    } catch (const ech2q::VerificationError& e) {
        std::cerr << "verification error: " << e.what() << '\n';
        return kExitVerificationFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
}
