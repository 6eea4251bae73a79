#pragma once

// Command-line front end. run() does all the work and returns the text to
// print, so it can be exercised without a process boundary.

#include "seifert/seifert.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace seifert::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";
inline constexpr std::uint64_t kDefaultSeed = 20190101;

enum class Status { Ok, Error };

struct CommandResult {
    Status status = Status::Ok;
    std::optional<Json> payload; ///< absent on error
    std::string message;         ///< one human-readable line
    std::string output;          ///< what goes to stdout (stderr text on error)
    int exit_code = 0;
};

namespace detail {

inline Json schema_doc()
{
    Json j;
    j["schema"] = kSchemaVersion;
    return j;
}

inline Json matrix_json(const IntMatrix2& m)
{
    return Json::array({Json::array({m.a.str(), m.b.str()}), Json::array({m.c.str(), m.d.str()})});
}

inline Json report_json(const AdmissibilityReport& r)
{
    Json j;
    j["admissible"] = r.admissible;
    j["violations"] = Json::array();
    for (auto v : r.violations) j["violations"].push_back(to_string(v));
    j["case_label"] = r.case_label ? Json(to_string(*r.case_label)) : Json(nullptr);
    j["geometry"] = to_string(r.geometry);
    return j;
}

inline Json class_json(const SurfaceInvolutionClass& c)
{
    Json j;
    j["kind"] = to_string(c.kind);
    j["g"] = c.g;
    j["r"] = c.r;
    j["name"] = to_string(c);
    j["orientation_preserving"] = orientation_preserving(c.kind);
    const FixedPointData fp = fixed_point_data(c);
    Json f;
    f["entire_surface"] = fp.entire_surface;
    f["isolated_points"] = fp.isolated_points;
    f["circles"] = fp.circles;
    f["free"] = fp.free();
    j["fixed_points"] = f;
    j["survives_free_exclusion"] = survives_free_exclusion(c);
    return j;
}

inline Json invariants_json(const std::string& input, const SeifertInvariants& m)
{
    Json j = schema_doc();
    j["input"] = input;
    j["normalized"] = print_seifert(normalize(m));
    j["euler_number"] = to_fraction_string(euler_number(m));
    j["chi_orb"] = to_fraction_string(orbifold_euler_characteristic(m));
    j["geometry"] = to_string(geometry(m));
    std::optional<CaseLabel> label;
    if (m.base.orientable) label = check_admissible(m).case_label;
    j["case"] = label ? Json(to_string(*label)) : Json(nullptr);
    return j;
}

inline FillingSlope parse_slope(const std::string& text)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError(0, "slope must be written m,l");
    try {
        return FillingSlope(Integer(text.substr(0, comma)), Integer(text.substr(comma + 1)));
    } catch (const std::runtime_error& e) {
        if (dynamic_cast<const Error*>(&e)) throw;
        throw ParseError(0, "slope must be two integers m,l");
    }
}

inline std::string text_of(const Json& j)
{
    std::ostringstream os;
    for (const auto& [k, v] : j.items()) {
        if (k == "schema") continue;
        os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    return os.str();
}

inline CommandResult ok(Json payload, std::string text, std::string message)
{
    CommandResult r;
    r.status = Status::Ok;
    r.output = std::move(text);
    r.message = std::move(message);
    r.payload = std::move(payload);
    return r;
}

inline CommandResult fail(int code, std::string message, std::string text = {})
{
    CommandResult r;
    r.status = Status::Error;
    r.exit_code = code;
    r.message = std::move(message);
    r.output = text.empty() ? r.message + "\n" : std::move(text);
    return r;
}

} // namespace detail

/// Dispatches one invocation. `args` excludes the program name. `env_seed`
/// is the value of SEIFERT_SEED, if set.
inline CommandResult run(const std::vector<std::string>& args, std::optional<std::string> env_seed = std::nullopt)
{
    using namespace detail;

    CLI::App app{"Fiber-preserving orientation-reversing involutions of Seifert fibered 3-manifolds", "seifert"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "Machine-readable JSON output");

    std::string descriptor;

    auto* classify = app.add_subcommand("classify", "Invariants, geometry and case label of a descriptor");
    classify->add_option("descriptor", descriptor, "Seifert notation, e.g. \"(0,o1|(2,1),(2,1),(1,-1))\"")->required();

    auto* admissible = app.add_subcommand("admissible", "Admissibility report (JSON)");
    admissible->add_option("descriptor", descriptor)->required();

    std::int64_t gmax = 0, nmax = 0;
    auto* enumerate = app.add_subcommand("enumerate", "Admissible descriptors in a genus/n window");
    enumerate->add_option("--gmax", gmax)->required()->check(CLI::NonNegativeNumber);
    enumerate->add_option("--nmax", nmax)->required()->check(CLI::NonNegativeNumber);

    std::string mat_a, mat_b;
    std::int64_t bound = 5;
    auto* mcg = app.add_subcommand("mcg", "Torus mapping classes in GL2(Z)");
    mcg->require_subcommand(1);
    auto* mcg_class = mcg->add_subcommand("class", "Conjugacy class of an involution");
    mcg_class->add_option("matrix", mat_a, "\"a,b;c,d\"")->required();
    auto* mcg_conj = mcg->add_subcommand("conjugate", "Search a conjugator H with H A H^-1 = B");
    mcg_conj->add_option("A", mat_a)->required();
    mcg_conj->add_option("B", mat_b)->required();
    mcg_conj->add_option("--bound", bound, "Entry bound for the search")->check(CLI::NonNegativeNumber);

    std::string slope_text;
    auto* extend = app.add_subcommand("extend", "Does a boundary involution extend across a filling?");
    extend->add_option("--slope", slope_text, "m,l")->required();
    extend->add_option("--matrix", mat_a, "\"a,b;c,d\"")->required();

    auto* verify = app.add_subcommand("verify-v221", "Verify the V(2,2;-1) boundary data");

    std::int64_t genus = 0;
    std::string filter = "all";
    auto* surface = app.add_subcommand("surface-classes", "Involution classes on the genus-g surface (JSON)");
    surface->add_option("--genus", genus)->required()->check(CLI::NonNegativeNumber);
    surface->add_option("--filter", filter)->check(CLI::IsMember({"all", "preserving", "reversing"}));

    auto* census = app.add_subcommand("census", "Involutions up to conjugacy as psi o g");
    census->add_option("descriptor", descriptor)->required();

    auto* lift = app.add_subcommand("lift", "Orientable base-space double cover");
    lift->add_option("descriptor", descriptor)->required();

    std::int64_t trials = 100;
    std::optional<std::uint64_t> seed_opt;
    auto* psi_check = app.add_subcommand("psi-check", "Randomized re-framing check of psi data");
    psi_check->add_option("descriptor", descriptor)->required();
    psi_check->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
    psi_check->add_option("--seed", seed_opt);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        return ok(schema_doc(), app.help(), "help");
    } catch (const CLI::ParseError& e) {
        return fail(2, std::string("usage error: ") + e.what(), std::string("usage error: ") + e.what() + "\n\n" + app.help());
    }

    try {
        if (classify->parsed()) {
            const SeifertInvariants m = parse_seifert(descriptor);
            Json j = invariants_json(descriptor, m);
            return ok(j, json ? j.dump(2) + "\n" : text_of(j), "classified " + print_seifert(m));
        }

        if (admissible->parsed()) {
            const SeifertInvariants m = parse_seifert(descriptor);
            Json j = schema_doc();
            j["input"] = descriptor;
            j.update(report_json(check_admissible(m)));
            j["excludes_fixed_point_free"] = exclude_fixed_point_free(m);
            return ok(j, j.dump(2) + "\n", "admissibility of " + print_seifert(m));
        }

        if (enumerate->parsed()) {
            Json j = schema_doc();
            j["gmax"] = gmax;
            j["nmax"] = nmax;
            j["descriptors"] = Json::array();
            std::ostringstream text;
            for (const auto& m : enumerate_admissible(gmax, nmax)) {
                const Rational chi = orbifold_euler_characteristic(m);
                const std::string c = to_string(classify_case(m));
                const std::string g = to_string(geometry(m));
                Json d;
                d["descriptor"] = print_seifert(m);
                d["case"] = c;
                d["geometry"] = g;
                d["chi_orb"] = to_fraction_string(chi);
                d["euler_number"] = to_fraction_string(euler_number(m));
                j["descriptors"].push_back(d);
                text << print_seifert(m) << " case=" << c << " geometry=" << g << " chi_orb=" << to_fraction_string(chi)
                     << "\n";
            }
            return ok(j, json ? j.dump(2) + "\n" : text.str(),
                      std::to_string(j["descriptors"].size()) + " admissible descriptors");
        }

        if (mcg_class->parsed()) {
            const IntMatrix2 a = parse_matrix(mat_a);
            Json j = schema_doc();
            j["matrix"] = format_matrix(a);
            j["det"] = mat_det(a).str();
            j["trace"] = mat_trace(a).str();
            j["involution"] = is_unimodular(a) && is_involution(a);
            if (!is_unimodular(a)) return fail(1, "mcg class: matrix " + format_matrix(a) + " is not in GL2(Z)");
            if (!is_involution(a)) return fail(1, "mcg class: matrix " + format_matrix(a) + " is not an involution");
            j["class"] = to_string(involution_class(a));
            return ok(j, json ? j.dump(2) + "\n" : j["class"].get<std::string>() + "\n", "classified matrix");
        }

        if (mcg_conj->parsed()) {
            const IntMatrix2 a = parse_matrix(mat_a);
            const IntMatrix2 b = parse_matrix(mat_b);
            if (!is_unimodular(a) || !is_unimodular(b)) return fail(1, "mcg conjugate: both matrices must be in GL2(Z)");
            const auto h = find_conjugator(a, b, bound);
            Json j = schema_doc();
            j["A"] = format_matrix(a);
            j["B"] = format_matrix(b);
            j["bound"] = bound;
            j["conjugator"] = h ? Json(format_matrix(*h)) : Json(nullptr);
            const std::string text = h ? "conjugator: " + format_matrix(*h) + "\n"
                                       : "no conjugator with entries in [-" + std::to_string(bound) + "," +
                                             std::to_string(bound) + "]\n";
            return ok(j, json ? j.dump(2) + "\n" : text, "conjugator search");
        }

        if (extend->parsed()) {
            const FillingSlope s = parse_slope(slope_text);
            const IntMatrix2 a = parse_matrix(mat_a);
            Json j = schema_doc();
            j["slope"] = s.str();
            j["matrix"] = format_matrix(a);
            j["involution"] = is_unimodular(a) && is_involution(a);
            j["allowed"] = Json::array();
            for (const auto& m : extension_condition(s)) j["allowed"].push_back(format_matrix(m));
            const bool ext = check_extends(a, s);
            j["extends"] = ext;
            return ok(j, json ? j.dump(2) + "\n" : std::string(ext ? "true" : "false") + "\n" + j.dump(2) + "\n",
                      ext ? "extends" : "does not extend");
        }

        if (verify->parsed()) {
            const PsiBoundaryData data = psi_boundary_data();
            const V221Report r = verify_v221_construction(data);
            Json j = schema_doc();
            j["inner"] = Json::array();
            for (const auto& t : data.inner) {
                Json d;
                d["matrix"] = format_matrix(t.action);
                d["filling"] = t.filling.str();
                j["inner"].push_back(d);
            }
            j["outer"] = format_matrix(data.outer);
            j["involutions"] = r.involutions;
            j["assignment_found"] = r.assignment_found;
            j["assignment"] = Json::array();
            for (const auto& s : r.assignment) j["assignment"].push_back(s ? Json(s->str()) : Json(nullptr));
            j["outer_fiber_reversing"] = r.outer_fiber_reversing;
            j["twist_balanced"] = r.twist_balanced;
            j["block_shape"] = r.block_shape;
            Json hom = Json::array();
            for (bool reversed : {false, true}) {
                const auto h = boundary_homology_identity(reversed);
                Json e;
                e["fiber"] = reversed ? "reversed" : "preserved";
                e["alpha_image"] = h.pushforward.alpha_sign ? Json(*h.pushforward.alpha_sign == 1 ? "alpha" : "alpha^-1")
                                                            : Json(nullptr);
                e["t_exponent"] = h.pushforward.image.t.str();
                e["passed"] = h.passed;
                hom.push_back(e);
            }
            j["homology_identity"] = hom;
            const bool passed = r.passed() && hom[0]["passed"].get<bool>() && hom[1]["passed"].get<bool>();
            j["passed"] = passed;
            std::ostringstream text;
            for (std::size_t i = 0; i < 3; ++i)
                text << "matrix " << i + 1 << ": " << format_matrix(data.inner[i].action) << " -> "
                     << (r.assignment[i] ? r.assignment[i]->str() : "unassigned") << "\n";
            text << "involutions: " << (r.involutions ? "pass" : "fail") << "\n"
                 << "assignment: " << (r.assignment_found ? "pass" : "fail") << "\n"
                 << "outer boundary: " << (r.outer_fiber_reversing ? "pass" : "fail") << "\n"
                 << "twist balance: " << (r.twist_balanced ? "pass" : "fail") << "\n"
                 << "block shape: " << (r.block_shape ? "pass" : "fail") << "\n";
            for (const auto& e : hom)
                text << "homology (" << e["fiber"].get<std::string>() << " fiber): " << (e["passed"].get<bool>() ? "pass" : "fail")
                     << "\n";
            text << "result: " << (passed ? "pass" : "fail") << "\n";
            if (!passed) return fail(1, "verify-v221: verification failed", text.str());
            return ok(j, json ? j.dump(2) + "\n" : text.str(), "verification passed");
        }

        if (surface->parsed()) {
            const OrientationFilter f = filter == "preserving"  ? OrientationFilter::Preserving
                                        : filter == "reversing" ? OrientationFilter::Reversing
                                                                : OrientationFilter::All;
            Json j = schema_doc();
            j["genus"] = genus;
            j["filter"] = filter;
            j["classes"] = Json::array();
            for (const auto& c : classes_for_genus(genus, f)) j["classes"].push_back(class_json(c));
            const ClassCounts counts = count_classes(genus);
            j["counts"] = {{"preserving", counts.preserving}, {"reversing", counts.reversing}, {"total", counts.total}};
            return ok(j, j.dump(2) + "\n", "surface classes");
        }

        if (census->parsed()) {
            const SeifertInvariants m = parse_seifert(descriptor);
            const CensusReport rep = enumerate_factorizations(m);
            Json j = schema_doc();
            j["manifold"] = print_seifert(rep.manifold);
            j["count"] = rep.count;
            j["records"] = Json::array();
            std::ostringstream text;
            text << "manifold: " << print_seifert(rep.manifold) << "\n" << "count: " << rep.count << "\n";
            for (const auto& rec : rep.records) {
                Json r;
                r["fiber_orientation"] = to_string(rec.fiber_orientation);
                r["surface_class"] = to_string(rec.surface_class);
                r["fixed_boundary_count"] = rec.fixed_boundary_count;
                j["records"].push_back(r);
                text << "  psi o g: g fiber " << to_string(rec.fiber_orientation) << ", base "
                     << to_string(rec.surface_class) << ", fixes " << rec.fixed_boundary_count << " marked fibers\n";
            }
            return ok(j, json ? j.dump(2) + "\n" : text.str(), "census of " + print_seifert(m));
        }

        if (lift->parsed()) {
            const SeifertInvariants m = parse_seifert(descriptor);
            const LiftReport r = lift_to_double_cover(m);
            Json j = schema_doc();
            j["input"] = print_seifert(m);
            j["cover"] = print_seifert(r.cover);
            j["chi_orb"] = to_fraction_string(r.chi_orb_base);
            j["chi_orb_cover"] = to_fraction_string(r.chi_orb_cover);
            j["euler_number"] = to_fraction_string(r.euler_base);
            j["euler_number_cover"] = to_fraction_string(r.euler_cover);
            j["chi_doubles"] = r.chi_doubles;
            j["euler_doubles"] = r.euler_doubles;
            j["cover_admissibility"] = report_json(r.cover_admissibility);
            return ok(j, json ? j.dump(2) + "\n" : text_of(j), "lifted " + print_seifert(m));
        }

        if (psi_check->parsed()) {
            std::uint64_t seed = kDefaultSeed;
            if (seed_opt) {
                seed = *seed_opt;
            } else if (env_seed) {
                try {
                    seed = std::stoull(*env_seed);
                } catch (const std::exception&) {
                    return fail(2, "usage error: SEIFERT_SEED must be a non-negative integer");
                }
            }
            const SeifertInvariants m = parse_seifert(descriptor);
            const bool passed = psi_is_conjugacy_class_check(m, trials, seed);
            Json j = schema_doc();
            j["manifold"] = print_seifert(normalize(m));
            j["trials"] = trials;
            j["seed"] = seed;
            j["passed"] = passed;
            const std::string text = std::string("psi-check: ") + (passed ? "pass" : "fail") +
                                     " (trials=" + std::to_string(trials) + ", seed=" + std::to_string(seed) + ")\n";
            if (!passed) return fail(1, "psi-check failed", text);
            return ok(j, json ? j.dump(2) + "\n" : text, "psi-check passed");
        }
    } catch (const ParseError& e) {
        return fail(1, e.what());
    } catch (const Error& e) {
        return fail(1, std::string("error: ") + e.what());
    }

    return fail(2, "usage error: no subcommand", app.help());
}

} // namespace seifert::cli
