// orbitchin: command-line front end for the stacky-curve invariant library.
//
// Subcommands parse a curve description (flags or a small key=value file),
// dispatch to the library, and print either human-readable key=value lines or
// machine-readable JSON records (one object per line, exact rationals as
// num/den pairs).  Exit codes: 0 success, 2 usage error, 3 domain error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "orbitchin/bundle.hpp"
#include "orbitchin/curve.hpp"
#include "orbitchin/hitchin.hpp"
#include "orbitchin/local_model.hpp"
#include "orbitchin/rational.hpp"
#include "orbitchin/spectral.hpp"

namespace {

using json = nlohmann::json;
using namespace orbitchin;

// ---------------------------------------------------------------------------
// small parsing helpers

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    if (trim(s).empty()) {
        return out;
    }
    std::stringstream stream(s);
    std::string item;
    while (std::getline(stream, item, sep)) {
        out.push_back(trim(item));
    }
    return out;
}

long long parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const long long value = std::stoll(s, &pos);
        if (pos != s.size()) {
            throw std::invalid_argument("");
        }
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument(what + ": invalid integer '" + s + "'");
    }
}

std::vector<long long> parse_int_list(const std::string& s, const std::string& what) {
    std::vector<long long> out;
    for (const auto& item : split(s, ',')) {
        out.push_back(parse_int(item, what));
    }
    return out;
}

Rational parse_rational(const std::string& s, const std::string& what) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_int(s, what));
    }
    const long long num = parse_int(s.substr(0, slash), what);
    const long long den = parse_int(s.substr(slash + 1), what);
    if (den == 0) {
        throw std::invalid_argument(what + ": zero denominator in '" + s + "'");
    }
    return Rational(num, den);
}

// ---------------------------------------------------------------------------
// curve input: --genus/--orders/--labels, or --curve FILE with key=value lines

struct CurveOptions {
    long long genus = 0;
    std::string orders;
    std::string labels;
    std::string file;
    CLI::Option* genus_opt = nullptr;
    CLI::Option* orders_opt = nullptr;
    CLI::Option* labels_opt = nullptr;
    CLI::Option* file_opt = nullptr;
};

void add_curve_options(CLI::App* cmd, CurveOptions& in) {
    in.genus_opt = cmd->add_option("--genus", in.genus, "coarse genus");
    in.orders_opt = cmd->add_option("--orders", in.orders,
                                    "comma-separated stabilizer orders, e.g. 3,2,2,2,2");
    in.labels_opt = cmd->add_option("--labels", in.labels,
                                    "comma-separated point labels (default p1..pm)");
    in.file_opt = cmd->add_option("--curve", in.file,
                                  "read the curve from FILE (lines genus=N, orders=a,b,c, "
                                  "optional labels=..., # comments)");
}

CurveSignature build_signature(long long genus, const std::vector<long long>& orders,
                               const std::vector<std::string>& labels) {
    if (labels.empty()) {
        return make_signature(genus, orders);
    }
    if (labels.size() != orders.size()) {
        throw std::invalid_argument("labels: expected " + std::to_string(orders.size()) +
                                    " labels, got " + std::to_string(labels.size()));
    }
    std::vector<StackyPoint> points;
    for (std::size_t k = 0; k < orders.size(); ++k) {
        points.push_back({labels[k], orders[k]});
    }
    return CurveSignature(genus, std::move(points));
}

CurveSignature parse_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("--curve: cannot open '" + path + "'");
    }
    std::optional<long long> genus;
    std::optional<std::vector<long long>> orders;
    std::vector<std::string> labels;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("--curve: expected key=value, got '" + line + "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "genus") {
            if (genus) {
                throw std::invalid_argument("--curve: duplicate key 'genus'");
            }
            genus = parse_int(value, "genus");
        } else if (key == "orders") {
            if (orders) {
                throw std::invalid_argument("--curve: duplicate key 'orders'");
            }
            orders = parse_int_list(value, "orders");
        } else if (key == "labels") {
            if (!labels.empty()) {
                throw std::invalid_argument("--curve: duplicate key 'labels'");
            }
            labels = split(value, ',');
        } else {
            throw std::invalid_argument("--curve: unknown key '" + key + "'");
        }
    }
    if (!genus) {
        throw std::invalid_argument("--curve: missing 'genus' line");
    }
    if (!orders) {
        throw std::invalid_argument("--curve: missing 'orders' line");
    }
    return build_signature(*genus, *orders, labels);
}

CurveSignature resolve_curve(const CurveOptions& in) {
    if (in.file_opt->count() > 0) {
        if (in.genus_opt->count() > 0 || in.orders_opt->count() > 0 ||
            in.labels_opt->count() > 0) {
            throw std::invalid_argument(
                "--curve cannot be combined with --genus/--orders/--labels");
        }
        return parse_curve_file(in.file);
    }
    if (in.genus_opt->count() == 0) {
        throw std::invalid_argument("missing --genus (or --curve FILE)");
    }
    return build_signature(in.genus, parse_int_list(in.orders, "orders"),
                           split(in.labels, ','));
}

// ---------------------------------------------------------------------------
// rendering helpers

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string render_list(const std::vector<long long>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(v[i]);
    }
    return out + ")";
}

std::string render_points(const CurveSignature& sig) {
    if (sig.point_count() == 0) {
        return "(none)";
    }
    std::string out;
    for (std::size_t k = 0; k < sig.point_count(); ++k) {
        if (k > 0) {
            out += ",";
        }
        out += sig.label(k) + ":" + std::to_string(sig.order(k));
    }
    return out;
}

std::string render_divisor(const QDivisor& d) {
    if (d.coeffs().empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [label, c] : d.coeffs()) {
        if (!out.empty()) {
            out += " + ";
        }
        out += (c < Rational(0) ? "(" + c.str() + ")" : c.str()) + "*" + label;
    }
    return out;
}

std::string render_pic(const PicClass& p) {
    std::string out = "Pic^(" + std::to_string(p.coarse_degree());
    if (!p.indices().empty()) {
        out += "; ";
        for (std::size_t k = 0; k < p.indices().size(); ++k) {
            if (k > 0) {
                out += ",";
            }
            out += std::to_string(p.indices()[k]);
        }
    }
    return out + ")";
}

// pick a coarse-point label that does not collide with a stacky label
std::string coarse_label_for(const CurveSignature& sig) {
    if (!sig.find("q")) {
        return "q";
    }
    for (long long i = 0;; ++i) {
        const std::string candidate = "q" + std::to_string(i);
        if (!sig.find(candidate)) {
            return candidate;
        }
    }
}

json rational_json(const Rational& r) {
    return json{{"num", r.numerator()}, {"den", r.denominator()}};
}

json curve_json(const CurveSignature& sig) {
    json orders = json::array();
    json labels = json::array();
    for (std::size_t k = 0; k < sig.point_count(); ++k) {
        orders.push_back(sig.order(k));
        labels.push_back(sig.label(k));
    }
    return json{{"genus", sig.genus()}, {"orders", orders}, {"labels", labels}};
}

json divisor_json(const QDivisor& d) {
    json terms = json::array();
    for (const auto& [label, c] : d.coeffs()) {
        terms.push_back(json{{"label", label}, {"coeff", rational_json(c)}});
    }
    return terms;
}

json pic_json(const PicClass& p) {
    return json{{"coarse_degree", p.coarse_degree()}, {"indices", p.indices()}};
}

json dims_json(const DimensionReport& rep) {
    return json{{"moduli_gl", rep.moduli_gl}, {"moduli_sl", rep.moduli_sl},
                {"base_gl", rep.base_gl},     {"base_sl", rep.base_sl},
                {"fiber_gl", rep.fiber_gl},   {"fiber_sl", rep.fiber_sl},
                {"gamma0_order", rep.gamma0_order}};
}

void emit(bool machine, const json& record, const std::vector<std::string>& lines) {
    if (machine) {
        std::cout << record.dump() << "\n";
    } else {
        for (const auto& line : lines) {
            std::cout << line << "\n";
        }
    }
}

// ---------------------------------------------------------------------------
// subcommand bodies

void run_curve_info(const CurveSignature& sig, bool machine) {
    const auto K = canonical_divisor(sig, coarse_label_for(sig));
    const auto K_class = pic_class(K);
    json record{{"command", "curve-info"},
                {"curve", curve_json(sig)},
                {"canonical_degree", rational_json(canonical_degree(sig))},
                {"hyperbolic", is_hyperbolic(sig)},
                {"k_divisor", divisor_json(K)},
                {"k_class", pic_json(K_class)}};
    emit(machine, record,
         {"genus=" + std::to_string(sig.genus()),
          "points=" + render_points(sig),
          "canonical_degree=" + canonical_degree(sig).str(),
          "hyperbolic=" + yesno(is_hyperbolic(sig)),
          "K=" + render_divisor(K),
          "K_class=" + render_pic(K_class)});
}

void run_h0(const CurveSignature& sig, long long rank, bool machine) {
    if (rank < 1) {
        throw std::invalid_argument("--rank: must be at least 1");
    }
    json rows = json::array();
    std::vector<std::string> lines = {"j\tpushforward\th0"};
    for (long long j = 1; j <= rank; ++j) {
        const long long push = pushforward_K_power(sig, j);
        const long long h0 = h0_K_power(sig, j);
        rows.push_back(json{{"j", j}, {"pushforward", push}, {"h0", h0}});
        lines.push_back(std::to_string(j) + "\t" + std::to_string(push) + "\t" +
                        std::to_string(h0));
    }
    json record{{"command", "h0"},
                {"curve", curve_json(sig)},
                {"rank", rank},
                {"rows", rows}};
    emit(machine, record, lines);
}

void run_classify(const CurveSignature& sig, long long rank, bool traceless, bool machine) {
    const auto v = classify_spectral(sig, rank, traceless);
    json record{{"command", "classify"},
                {"curve", curve_json(sig)},
                {"rank", v.rank},
                {"traceless", v.traceless},
                {"outcome", to_string(v.outcome)},
                {"branch", v.branch},
                {"fired_condition", v.fired_condition},
                {"q_r", v.q_r},
                {"q_r_minus_1", v.q_r_minus_1},
                {"sum_htilde_r", v.sum_htilde_r},
                {"sum_htilde_r_minus_1", v.sum_htilde_r_minus_1},
                {"integrality", v.integrality}};
    emit(machine, record,
         {"outcome=" + to_string(v.outcome),
          "branch=" + std::to_string(v.branch),
          "fired_condition=" + v.fired_condition,
          "traceless=" + yesno(v.traceless),
          "rank=" + std::to_string(v.rank),
          "q_r=" + render_list(v.q_r),
          "q_r_minus_1=" + render_list(v.q_r_minus_1),
          "sum_htilde_r=" + std::to_string(v.sum_htilde_r),
          "sum_htilde_r_minus_1=" + std::to_string(v.sum_htilde_r_minus_1),
          "integrality=" + yesno(v.integrality)});
}

void append_dims_lines(const DimensionReport& rep, std::vector<std::string>& lines) {
    lines.push_back("moduli_gl=" + std::to_string(rep.moduli_gl));
    lines.push_back("moduli_sl=" + std::to_string(rep.moduli_sl));
    lines.push_back("base_gl=" + std::to_string(rep.base_gl));
    lines.push_back("base_sl=" + std::to_string(rep.base_sl));
    lines.push_back("fiber_gl=" + std::to_string(rep.fiber_gl));
    lines.push_back("fiber_sl=" + std::to_string(rep.fiber_sl));
    lines.push_back("gamma0_order=" + std::to_string(rep.gamma0_order));
}

void run_dims(const CurveSignature& sig, long long rank, long long degree, bool machine) {
    const auto rep = dimension_report(sig, rank, degree);
    const bool integrable = integrable_check(sig, rank, degree);
    json record{{"command", "dims"},
                {"curve", curve_json(sig)},
                {"rank", rank},
                {"degree", degree},
                {"dims", dims_json(rep)},
                {"integrable", integrable}};
    std::vector<std::string> lines = {"rank=" + std::to_string(rank),
                                      "degree=" + std::to_string(degree)};
    append_dims_lines(rep, lines);
    lines.push_back("integrable=" + yesno(integrable));
    emit(machine, record, lines);
}

void run_syz(const CurveSignature& sig, long long rank, long long degree, bool machine) {
    const auto v = syz_check(sig, rank, degree);
    json record{{"command", "syz"},
                {"curve", curve_json(sig)},
                {"rank", rank},
                {"degree", degree},
                {"verdict", to_string(v.outcome)},
                {"branch", v.branch},
                {"fired_condition", v.fired_condition},
                {"dims", dims_json(v.dims)},
                {"generic_weight", v.generic_weight},
                {"spectral_outcome", to_string(v.spectral.outcome)}};
    std::vector<std::string> lines = {"verdict=" + to_string(v.outcome),
                                      "branch=" + std::to_string(v.branch),
                                      "fired_condition=" + v.fired_condition,
                                      "rank=" + std::to_string(rank),
                                      "degree=" + std::to_string(degree),
                                      "generic_weight=" + yesno(v.generic_weight)};
    append_dims_lines(v.dims, lines);
    lines.push_back("spectral_outcome=" + to_string(v.spectral.outcome));
    if (v.spectral_signature) {
        json orders = json::array();
        for (std::size_t k = 0; k < v.spectral_signature->point_count(); ++k) {
            orders.push_back(v.spectral_signature->order(k));
        }
        record["spectral_signature"] = curve_json(*v.spectral_signature);
        lines.push_back("spectral_signature=genus " +
                        std::to_string(v.spectral_signature->genus()) + ", points " +
                        render_points(*v.spectral_signature));
    }
    if (v.fiber_torsor) {
        record["fiber_torsor"] = pic_json(*v.fiber_torsor);
        lines.push_back("fiber_torsor=" + render_pic(*v.fiber_torsor) +
                        " [indices normalized to zero]");
    }
    emit(machine, record, lines);
}

void run_local(long long order, const std::vector<long long>& mults, bool machine) {
    const LocalType t(order, mults);
    const auto v = classify_local(t);
    json record{{"command", "local"},
                {"order", order},
                {"mults", mults},
                {"rank", t.rank()},
                {"case", to_string(v.tag)},
                {"conjugate", v.conjugate},
                {"coarse_orders", v.orders.coarse},
                {"orbifold_orders", v.orders.orbifold}};
    emit(machine, record,
         {"order=" + std::to_string(order),
          "mults=" + render_list(mults),
          "rank=" + std::to_string(t.rank()),
          "conjugate=" + render_list(v.conjugate),
          "coarse_orders=" + render_list(v.orders.coarse),
          "orbifold_orders=" + render_list(v.orders.orbifold),
          "local model: case " + to_string(v.tag)});
}

struct NormOptions {
    CurveOptions source;
    CurveOptions target;
    long long cover_degree = 1;
    std::string map;
    std::string divisor;
    long long pic_degree = 0;
    std::string pic_indices;
    CLI::Option* divisor_opt = nullptr;
    CLI::Option* pic_degree_opt = nullptr;
    CLI::Option* pic_indices_opt = nullptr;
};

void run_norm(const NormOptions& in, bool machine) {
    const auto source = resolve_curve(in.source);
    const auto target = resolve_curve(in.target);
    std::map<std::string, std::string> point_map;
    for (const auto& entry : split(in.map, ',')) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("--map: expected target=source, got '" + entry + "'");
        }
        const std::string target_label = trim(entry.substr(0, eq));
        if (point_map.count(target_label) > 0) {
            throw std::invalid_argument("--map: duplicate target label '" + target_label + "'");
        }
        point_map[target_label] = trim(entry.substr(eq + 1));
    }
    const CoverData cover(source, target, in.cover_degree, point_map);

    const bool have_divisor = in.divisor_opt->count() > 0;
    const bool have_pic = in.pic_degree_opt->count() > 0;
    if (have_divisor == have_pic) {
        throw std::invalid_argument("norm: give exactly one of --divisor or --pic-degree");
    }

    json record{{"command", "norm"},
                {"cover", json{{"source", curve_json(source)},
                               {"target", curve_json(target)},
                               {"degree", in.cover_degree},
                               {"point_map", point_map}}}};
    std::vector<std::string> lines = {
        "cover_degree=" + std::to_string(in.cover_degree),
        "source=genus " + std::to_string(source.genus()) + ", points " + render_points(source),
        "target=genus " + std::to_string(target.genus()) + ", points " + render_points(target)};

    if (have_divisor) {
        std::map<std::string, Rational> coeffs;
        for (const auto& term : split(in.divisor, ',')) {
            const auto at = term.find('@');
            if (at == std::string::npos) {
                throw std::invalid_argument("--divisor: expected coeff@label, got '" + term +
                                            "'");
            }
            const std::string label = trim(term.substr(at + 1));
            if (coeffs.count(label) > 0) {
                throw std::invalid_argument("--divisor: duplicate label '" + label + "'");
            }
            coeffs[label] = parse_rational(trim(term.substr(0, at)), "--divisor");
        }
        const QDivisor a(source, coeffs);
        const auto pushed = norm_pushforward(cover, a);
        record["input_divisor"] = divisor_json(a);
        record["norm_divisor"] = divisor_json(pushed);
        lines.push_back("input_divisor=" + render_divisor(a));
        lines.push_back("norm_divisor=" + render_divisor(pushed));
    } else {
        std::vector<long long> indices = parse_int_list(in.pic_indices, "--pic-indices");
        if (in.pic_indices_opt->count() == 0) {
            indices.assign(source.point_count(), 0);
        }
        const PicClass p(source, in.pic_degree, indices);
        const auto pushed = norm_component(cover, p);
        record["input_pic"] = pic_json(p);
        record["norm_pic"] = pic_json(pushed);
        lines.push_back("input_pic=" + render_pic(p));
        lines.push_back("norm_pic=" + render_pic(pushed));
    }
    emit(machine, record, lines);
}

void run_examples(const std::string& name, bool machine) {
    const auto section = [machine](const std::string& title) {
        if (!machine) {
            std::cout << "== " << title << " ==\n";
        }
    };
    const auto gap = [machine] {
        if (!machine) {
            std::cout << "\n";
        }
    };
    if (name == "elliptic5") {
        const auto sig = make_signature(1, {5});
        section("curve-info");
        run_curve_info(sig, machine);
        gap();
        section("h0 --rank 2");
        run_h0(sig, 2, machine);
        gap();
        section("classify --rank 2");
        run_classify(sig, 2, false, machine);
    } else if (name == "p14222") {
        const auto sig = make_signature(0, {4, 2, 2, 2});
        section("curve-info");
        run_curve_info(sig, machine);
        gap();
        section("h0 --rank 6");
        run_h0(sig, 6, machine);
        gap();
        section("classify --rank 6");
        run_classify(sig, 6, false, machine);
    } else if (name == "p132222") {
        const auto sig = make_signature(0, {3, 2, 2, 2, 2});
        section("curve-info");
        run_curve_info(sig, machine);
        gap();
        section("h0 --rank 3");
        run_h0(sig, 3, machine);
        gap();
        section("classify --rank 3 --traceless");
        run_classify(sig, 3, true, machine);
        gap();
        section("dims --rank 3 --degree 1");
        run_dims(sig, 3, 1, machine);
        gap();
        section("syz --rank 3 --degree 1");
        run_syz(sig, 3, 1, machine);
    } else {
        throw std::invalid_argument("examples: unknown name '" + name +
                                    "' (expected elliptic5, p14222 or p132222)");
    }
}

void run_machine_echo() {
    std::string line;
    while (std::getline(std::cin, line)) {
        if (trim(line).empty()) {
            continue;
        }
        json record;
        try {
            record = json::parse(line);
        } catch (const json::parse_error& e) {
            throw std::invalid_argument(std::string("machine-echo: invalid record: ") +
                                        e.what());
        }
        std::cout << record.dump() << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact numerical invariants of Higgs-bundle moduli on stacky curves"};
    app.require_subcommand(1);

    bool machine = false;
    if (const char* env = std::getenv("ORBITCHIN_MACHINE")) {
        machine = std::string(env) == "1";
    }
    app.add_flag("--machine", machine, "emit machine-readable JSON records");

    // curve-info
    auto* info_cmd = app.add_subcommand("curve-info", "signature, canonical degree, K-divisor");
    CurveOptions info_in;
    add_curve_options(info_cmd, info_in);
    info_cmd->add_flag("--machine", machine, "emit machine-readable JSON records");

    // h0
    auto* h0_cmd = app.add_subcommand("h0", "pushforward degrees and section counts of K^j");
    CurveOptions h0_in;
    long long h0_rank = 0;
    add_curve_options(h0_cmd, h0_in);
    h0_cmd->add_option("--rank", h0_rank, "table rows j = 1..rank")->required();
    h0_cmd->add_flag("--machine", machine, "emit machine-readable JSON records");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "classify the generic spectral curve");
    CurveOptions classify_in;
    long long classify_rank = 0;
    bool classify_traceless = false;
    add_curve_options(classify_cmd, classify_in);
    classify_cmd->add_option("--rank", classify_rank, "rank of the Higgs field")->required();
    classify_cmd->add_flag("--traceless", classify_traceless,
                           "restrict to traceless characteristics");
    classify_cmd->add_flag("--machine", machine, "emit machine-readable JSON records");

    // dims
    auto* dims_cmd = app.add_subcommand("dims", "moduli, base and fiber dimensions");
    CurveOptions dims_in;
    long long dims_rank = 0;
    long long dims_degree = 1;
    add_curve_options(dims_cmd, dims_in);
    dims_cmd->add_option("--rank", dims_rank, "rank of the Higgs field")->required();
    dims_cmd->add_option("--degree", dims_degree, "coarse pushforward degree (default 1)");
    dims_cmd->add_flag("--machine", machine, "emit machine-readable JSON records");

    // syz
    auto* syz_cmd = app.add_subcommand("syz", "mirror-eligibility verdict");
    CurveOptions syz_in;
    long long syz_rank = 0;
    long long syz_degree = 1;
    add_curve_options(syz_cmd, syz_in);
    syz_cmd->add_option("--rank", syz_rank, "rank of the Higgs field")->required();
    syz_cmd->add_option("--degree", syz_degree, "coarse pushforward degree (default 1)");
    syz_cmd->add_flag("--machine", machine, "emit machine-readable JSON records");

    // local
    auto* local_cmd = app.add_subcommand("local", "local model at one stacky point");
    long long local_order = 0;
    std::string local_mults;
    local_cmd->add_option("--order", local_order, "stabilizer order")->required();
    local_cmd->add_option("--mults", local_mults, "comma-separated eigenvalue multiplicities")
        ->required();
    local_cmd->add_flag("--machine", machine, "emit machine-readable JSON records");

    // norm
    auto* norm_cmd = app.add_subcommand("norm", "norm-map transport along a cover");
    NormOptions norm_in;
    norm_in.source.genus_opt =
        norm_cmd->add_option("--source-genus", norm_in.source.genus, "source coarse genus");
    norm_in.source.orders_opt =
        norm_cmd->add_option("--source-orders", norm_in.source.orders, "source orders");
    norm_in.source.labels_opt =
        norm_cmd->add_option("--source-labels", norm_in.source.labels, "source labels");
    norm_in.source.file_opt =
        norm_cmd->add_option("--source-curve", norm_in.source.file, "source curve file");
    norm_in.target.genus_opt =
        norm_cmd->add_option("--target-genus", norm_in.target.genus, "target coarse genus");
    norm_in.target.orders_opt =
        norm_cmd->add_option("--target-orders", norm_in.target.orders, "target orders");
    norm_in.target.labels_opt =
        norm_cmd->add_option("--target-labels", norm_in.target.labels, "target labels");
    norm_in.target.file_opt =
        norm_cmd->add_option("--target-curve", norm_in.target.file, "target curve file");
    norm_cmd->add_option("--cover-degree", norm_in.cover_degree, "degree of the cover")
        ->required();
    norm_cmd->add_option("--map", norm_in.map,
                         "stacky point matching target=source, comma-separated");
    norm_in.divisor_opt = norm_cmd->add_option(
        "--divisor", norm_in.divisor, "divisor on the source as coeff@label, comma-separated");
    norm_in.pic_degree_opt = norm_cmd->add_option("--pic-degree", norm_in.pic_degree,
                                                  "coarse degree of a source Picard component");
    norm_in.pic_indices_opt = norm_cmd->add_option(
        "--pic-indices", norm_in.pic_indices, "fractional indices (default all zero)");
    norm_cmd->add_flag("--machine", machine, "emit machine-readable JSON records");

    // examples
    auto* examples_cmd = app.add_subcommand("examples", "built-in worked examples");
    std::string example_name;
    examples_cmd->add_option("name", example_name, "elliptic5, p14222 or p132222")->required();
    examples_cmd->add_flag("--machine", machine, "emit machine-readable JSON records");

    // hidden: parse machine records from stdin and re-emit them (round-trip check)
    auto* echo_cmd = app.add_subcommand("machine-echo", "");
    echo_cmd->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*info_cmd) {
            run_curve_info(resolve_curve(info_in), machine);
        } else if (*h0_cmd) {
            run_h0(resolve_curve(h0_in), h0_rank, machine);
        } else if (*classify_cmd) {
            run_classify(resolve_curve(classify_in), classify_rank, classify_traceless,
                         machine);
        } else if (*dims_cmd) {
            run_dims(resolve_curve(dims_in), dims_rank, dims_degree, machine);
        } else if (*syz_cmd) {
            run_syz(resolve_curve(syz_in), syz_rank, syz_degree, machine);
        } else if (*local_cmd) {
            run_local(local_order, parse_int_list(local_mults, "--mults"), machine);
        } else if (*norm_cmd) {
            run_norm(norm_in, machine);
        } else if (*examples_cmd) {
            run_examples(example_name, machine);
        } else if (*echo_cmd) {
            run_machine_echo();
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
