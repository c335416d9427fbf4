#include "klab/io.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "klab/log.hpp"
#include "klab/parse.hpp"

namespace klab {

using json = nlohmann::ordered_json;

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

namespace {

FieldSpec parse_field(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return FieldSpec{0};
        fail("bad_field", "field must be \"Q\" or {\"Fp\": prime}");
    }
    if (j.is_object() && j.contains("Fp")) {
        long long p = j.at("Fp").get<long long>();
        if (p < 2 || !is_prime_u32(static_cast<std::uint64_t>(p)))
            fail("not_prime", std::to_string(p) + " is not prime");
        return FieldSpec{static_cast<std::uint32_t>(p)};
    }
    fail("bad_field", "field must be \"Q\" or {\"Fp\": prime}");
}

} // namespace

InputDocument parse_input_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail("parse_error", std::string("malformed JSON: ") + e.what());
    }
    InputDocument doc;
    doc.raw_text = text;
    if (!j.is_object()) fail("bad_input", "input document must be a JSON object");
    if (!j.contains("field")) fail("bad_input", "missing \"field\"");
    doc.field = parse_field(j.at("field"));
    if (!j.contains("n") || !j.at("n").is_number_integer())
        fail("bad_input", "missing integer \"n\"");
    doc.n = j.at("n").get<int>();
    if (doc.n < 1) fail("bad_dimension", "n must be at least 1");

    bool has_ideal = j.contains("ideal");
    bool has_components = j.contains("components");
    if (has_ideal == has_components)
        fail("bad_input", "provide exactly one of \"ideal\" or \"components\"");

    RingPtr proj = Ring::projective(doc.n, doc.field);
    if (has_ideal) {
        for (const auto& entry : j.at("ideal")) {
            if (!entry.is_string()) fail("bad_input", "ideal entries must be polynomial strings");
            std::string text_poly = entry.get<std::string>();
            parse_polynomial(text_poly, proj);  // validate now, diagnostics carry the column
            doc.ideal_gens.push_back(std::move(text_poly));
        }
        if (doc.ideal_gens.empty()) fail("bad_input", "\"ideal\" must not be empty");
    } else {
        doc.from_components = true;
        for (const auto& entry : j.at("components")) {
            if (!entry.is_object()) fail("bad_input", "components must be objects");
            ComponentInput comp;
            if (entry.contains("point")) {
                std::vector<Scalar> coords;
                for (const auto& c : entry.at("point")) {
                    if (!c.is_string()) fail("bad_input", "point coordinates must be strings");
                    coords.push_back(Scalar::parse(c.get<std::string>(), doc.field));
                }
                comp.point = std::move(coords);
            }
            if (entry.contains("primary")) {
                for (const auto& g : entry.at("primary")) {
                    if (!g.is_string())
                        fail("bad_input", "primary generators must be polynomial strings");
                    std::string text_poly = g.get<std::string>();
                    parse_polynomial(text_poly, proj);
                    comp.primary_gens.push_back(std::move(text_poly));
                }
            }
            if (!comp.point.has_value() && comp.primary_gens.empty())
                fail("bad_input", "component needs a \"point\" or a \"primary\" ideal");
            doc.components.push_back(std::move(comp));
        }
        if (doc.components.empty()) fail("bad_input", "\"components\" must not be empty");
    }
    return doc;
}

InputDocument parse_input_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("io_error", "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_input_text(buffer.str());
}

Command command_from_name(const std::string& name) {
    if (name == "hilbert") return Command::Hilbert;
    if (name == "kaehler") return Command::Kaehler;
    if (name == "noether") return Command::Noether;
    if (name == "conductor") return Command::Conductor;
    if (name == "classify") return Command::Classify;
    if (name == "report") return Command::Report;
    fail("bad_command", "unknown command '" + name + "'");
}

Scheme build_scheme(const InputDocument& doc, const BuildOptions& options) {
    if (doc.from_components)
        return Scheme::from_components(doc.field, doc.n, doc.components, options);
    RingPtr proj = Ring::projective(doc.n, doc.field);
    std::vector<Polynomial> gens;
    for (const auto& text : doc.ideal_gens) gens.push_back(parse_polynomial(text, proj));
    return Scheme::from_ideal(doc.field, doc.n, std::move(gens), options);
}

namespace {

json hilbert_json(const Scheme& scheme) {
    const HilbertTable& hf = scheme.hilbert();
    json out;
    out["values"] = hf.prefix(hf.r_x + 1);
    out["r_x"] = hf.r_x;
    out["alpha_x"] = hf.alpha_x;
    out["degree"] = hf.degree;
    return out;
}

json view_json(const GradedIdealView& view, int fallback_len) {
    json out;
    std::vector<std::string> gens;
    for (const auto& g : view.gens) gens.push_back(g.to_string());
    out["generators"] = gens;
    out["hf"] = view.prefix(view.ri.value_or(fallback_len) + 1);
    out["hp"] = view.hp;
    if (view.ri.has_value())
        out["ri"] = *view.ri;
    else
        out["ri"] = nullptr;
    out["principal"] = view.principal();
    return out;
}

json conductor_json(const ConductorProfile& profile) {
    json out;
    out["dims"] = profile.dims;
    out["len_tilde_over_R"] = profile.len_tilde_over_r;
    out["len_R_over_F"] = profile.len_r_over_f;
    out["len_tilde_over_F"] = profile.len_tilde_over_f;
    if (profile.point_degrees.empty())
        out["point_degrees"] = nullptr;
    else
        out["point_degrees"] = profile.point_degrees;
    return out;
}

json classification_json(const ClassificationReport& rep) {
    json out;
    out["is_generic"] = rep.is_generic;
    out["boundary_case"] = rep.boundary_case;
    out["is_cb"] = rep.is_cb;
    if (rep.point_degrees.empty())
        out["point_degrees"] = nullptr;
    else
        out["point_degrees"] = rep.point_degrees;
    out["is_locally_gorenstein"] = rep.is_locally_gorenstein;
    out["is_arith_gorenstein"] = rep.is_arith_gorenstein;
    out["ag_routes"] = rep.ag_routes;
    out["is_locally_ci"] = rep.is_locally_ci;
    out["is_ci"] = rep.is_ci;
    out["ci_routes"] = rep.ci_routes;
    out["hf_kaehler_at_rx"] = rep.ci_witness_hf_kaehler_rx;
    out["ags_lengths"] = {{"len_tilde_over_R", rep.len_tilde_over_r},
                          {"len_R_over_F", rep.len_r_over_f}};
    json locals = json::array();
    for (const auto& e : rep.local_entries) {
        json l;
        l["multiplicity"] = e.multiplicity;
        l["kappa"] = e.kappa;
        l["socle_dim"] = e.socle_dim;
        l["gorenstein_point"] = e.is_gorenstein_point;
        l["ci_point"] = e.is_ci_point;
        l["kaehler_local_dim"] = e.kaehler_local_dim;
        locals.push_back(std::move(l));
    }
    out["components"] = rep.local_entries.empty() ? json(nullptr) : locals;
    out["consistency_failures"] = rep.consistency_failures;
    out["notes"] = rep.notes;
    return out;
}

std::string render_text(const json& doc) {
    std::ostringstream os;
    std::function<void(const json&, int)> walk = [&](const json& node, int indent) {
        std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
        for (auto it = node.begin(); it != node.end(); ++it) {
            if (it.value().is_object()) {
                os << pad << it.key() << ":\n";
                walk(it.value(), indent + 1);
            } else {
                os << pad << it.key() << ": " << it.value().dump() << "\n";
            }
        }
    };
    walk(doc, 0);
    return os.str();
}

} // namespace

RunResult run_command(Command cmd, const InputDocument& doc, const RunOptions& opts) {
    using clock = std::chrono::steady_clock;
    auto start = clock::now();
    auto ms_since = [&](clock::time_point t0) {
        return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
    };

    BuildOptions build_opts;
    build_opts.max_degree = opts.max_degree;
    build_opts.cross_check = opts.cross_check;
    build_opts.threads = opts.threads;

    json out;
    json timings;
    out["input_hash"] = fnv1a_hex(doc.raw_text);

    Scheme scheme = build_scheme(doc, build_opts);
    timings["build"] = ms_since(start);
    out["field"] = scheme.field().to_string();
    out["n"] = scheme.n();
    out["degree"] = scheme.degree();
    out["warnings"] = scheme.warnings();
    out["hilbert"] = hilbert_json(scheme);

    int exit_code = 0;
    bool need_kaehler = cmd == Command::Kaehler || cmd == Command::Classify || cmd == Command::Report;
    bool need_noether = cmd == Command::Noether || cmd == Command::Classify || cmd == Command::Report;
    bool need_conductor =
        cmd == Command::Conductor || cmd == Command::Classify || cmd == Command::Report;

    std::optional<GradedIdealView> kaehler, noether;
    if (need_kaehler) {
        auto t0 = clock::now();
        kaehler = kaehler_different(scheme);
        AffineReducedKaehler ark = affine_and_reduced_kaehler(scheme, *kaehler);
        json k = view_json(*kaehler, scheme.hilbert().r_x);
        k["affine_dim"] = ark.affine_dim;
        k["reduced_nonzero"] = ark.reduced_nonzero;
        out["kaehler"] = std::move(k);
        timings["kaehler"] = ms_since(t0);
    }
    if (need_noether) {
        auto t0 = clock::now();
        noether = noether_different(scheme);
        out["noether"] = view_json(*noether, scheme.hilbert().r_x);
        timings["noether"] = ms_since(t0);
    }
    std::optional<GradedEmbedding> embedding;
    std::optional<ConductorProfile> profile;
    if (need_conductor) {
        auto t0 = clock::now();
        embedding.emplace(scheme);
        profile = conductor(*embedding);
        out["conductor"] = conductor_json(*profile);
        timings["conductor"] = ms_since(t0);
    }
    if (cmd == Command::Classify || cmd == Command::Report) {
        auto t0 = clock::now();
        ClassificationReport rep =
            classify(scheme, *kaehler, *noether, *embedding, *profile, opts.cross_check);
        out["classification"] = classification_json(rep);
        timings["classify"] = ms_since(t0);
        if (!rep.consistency_failures.empty()) exit_code = 2;
    }
    timings["total"] = ms_since(start);
    out["timings_ms"] = std::move(timings);

    RunResult result;
    result.exit_code = exit_code;
    result.output = opts.json ? out.dump(2) + "\n" : render_text(out);
    return result;
}

} // namespace klab
