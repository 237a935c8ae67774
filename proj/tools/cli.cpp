#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lch/augment.hpp"
#include "lch/fixtures.hpp"
#include "lch/format.hpp"
#include "lch/grading.hpp"
#include "lch/linearize.hpp"

namespace lch::cli {
namespace {

using nlohmann::ordered_json;

struct Exit {
    int code;
};

struct Io {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

std::string read_source(const std::string& path, Io& io)
{
    std::ostringstream buf;
    if (path == "-") {
        buf << io.in.rdbuf();
        return buf.str();
    }
    std::ifstream f(path);
    if (!f) {
        io.err << path << ": cannot open file\n";
        throw Exit{kUsage};
    }
    buf << f.rdbuf();
    return buf.str();
}

Dga load(const std::string& path, bool verify, Io& io)
{
    const std::string text = read_source(path, io);
    const std::string label = path == "-" ? "<stdin>" : path;
    try {
        return parse_dga(text, ParseOptions{verify});
    } catch (const ParseError& e) {
        for (const auto& d : e.diagnostics())
            io.err << label << ':' << d.to_string() << '\n';
        throw Exit{kUsage};
    } catch (const VerificationError& e) {
        for (const auto& d : e.diagnostics())
            io.err << label << ':' << d.to_string() << '\n';
        throw Exit{kVerification};
    }
}

std::vector<std::string> split_commas(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(item);
    return out;
}

std::uint64_t parse_uint(const std::string& s, const char* what)
{
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size() || v < 0)
            throw std::invalid_argument(s);
        return static_cast<std::uint64_t>(v);
    } catch (const std::logic_error&) {
        throw StructuralError(std::string("invalid ") + what + " '" + s + "'");
    }
}

std::vector<std::uint64_t> parse_q_list(const std::string& s)
{
    std::vector<std::uint64_t> out;
    for (const auto& item : split_commas(s))
        out.push_back(parse_uint(item, "field order"));
    if (out.empty())
        throw StructuralError("empty field-order list");
    return out;
}

RhoPoint parse_rho(const std::string& s, std::uint64_t q, std::size_t rank)
{
    if (s.empty())
        return RhoPoint::ones(q, rank);
    std::vector<FieldElem> vals;
    for (const auto& item : split_commas(s))
        vals.push_back(static_cast<FieldElem>(parse_uint(item, "rho entry")));
    if (vals.size() != rank)
        throw InvalidPointError("--rho has " + std::to_string(vals.size()) + " entries; the ring has H1 rank " +
                                std::to_string(rank));
    return RhoPoint::make(q, std::move(vals));
}

std::string point_to_string(const RhoPoint& rho)
{
    std::string out = "(";
    for (std::size_t i = 0; i < rho.values.size(); ++i)
        out += (i ? "," : "") + std::to_string(rho.values[i]);
    return out + ")";
}

std::string aug_to_string(const Dga& d, const Augmentation& eps)
{
    std::string out;
    for (GenId g = 0; g < d.size(); ++g) {
        if (d.generators()[g].degree != 0)
            continue;
        out += (out.empty() ? "" : " ") + d.generators()[g].name + "=" + std::to_string(eps.values[g]);
    }
    return out.empty() ? "trivial" : out;
}

ordered_json aug_to_json(const Dga& d, const Augmentation& eps)
{
    ordered_json j = ordered_json::object();
    for (GenId g = 0; g < d.size(); ++g)
        if (d.generators()[g].degree == 0)
            j[d.generators()[g].name] = eps.values[g];
    return j;
}

ordered_json betti_json(const BettiTable& t)
{
    ordered_json j = ordered_json::object();
    for (const auto& [deg, dim] : t)
        j[std::to_string(deg)] = dim;
    return j;
}

Augmentation parse_aug(const std::string& s, const Dga& d)
{
    Augmentation eps{d.ring().field(), std::vector<FieldElem>(d.size(), 0)};
    for (const auto& item : split_commas(s)) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw StructuralError("--aug entries look like name=value, got '" + item + "'");
        auto id = d.find(item.substr(0, eq));
        if (!id)
            throw StructuralError("--aug names unknown generator '" + item.substr(0, eq) + "'");
        auto v = parse_uint(item.substr(eq + 1), "augmentation value");
        if (v >= d.ring().field()->order())
            throw StructuralError("--aug value " + std::to_string(v) + " is not a field element");
        eps.values[*id] = static_cast<FieldElem>(v);
    }
    if (!is_augmentation(d, eps))
        throw StructuralError("--aug does not define an augmentation (eps(d c) != 0 or nonzero off degree 0)");
    return eps;
}

struct Options {
    bool json = false;
    bool no_verify = false;
    std::uint64_t budget = kDefaultBudget;

    std::string file;
    std::string file2;
    std::string q;
    std::string rho;
    std::string aug;
    std::string names;
    bool emit = false;
    bool count = false;
    bool points = false;
    bool mixed_shift = false;
    bool expect_distinct = false;
    int deg = 0;
    int g = 1;
    int k = 0;
    unsigned characteristic = 0;
    int down = 0;
    int up = 0;
    int index = 0;
};

void add_common(CLI::App* sub, Options& o)
{
    sub->add_flag("--json", o.json, "Emit JSON (schema 1)");
    sub->add_flag("--no-verify", o.no_verify, "Accept documents failing degree or d^2 = 0 checks");
    sub->add_option("--budget", o.budget, "Maximum number of candidate evaluations");
}

int cmd_check(const Options& o, Io& io)
{
    Dga d = load(o.file, !o.no_verify, io);
    auto report = dga_verify(d);
    std::optional<UnitCertificate> cert;
    if (d.ring().is_field())
        cert = unit_in_image_linear(d);
    const bool good = is_good(d);
    if (o.json) {
        ordered_json j;
        j["schema"] = 1;
        j["generators"] = d.size();
        j["degree_minus_one"] = report.degrees_ok();
        j["d_squared_zero"] = report.d_squared_ok();
        j["good"] = good;
        j["unit_in_image_linear"] = cert ? ordered_json(cert->found) : ordered_json(nullptr);
        if (!report.ok())
            j["diagnostics"] = report.diagnostics();
        io.out << j.dump(2) << '\n';
    } else {
        io.out << (report.ok() ? "ok" : "FAILED") << ": " << d.size() << " generators over "
               << d.ring().coefficient_name() << ", H1 rank " << d.ring().h1_rank() << '\n';
        io.out << "degree -1: " << (report.degrees_ok() ? "pass" : "fail") << '\n';
        io.out << "d^2 = 0: " << (report.d_squared_ok() ? "pass" : "fail") << '\n';
        io.out << "good: " << (good ? "yes" : "no") << '\n';
        if (cert)
            io.out << "unit in image: " << (cert->found ? "certificate found" : "no linear certificate") << '\n';
        if (!report.ok())
            io.out << report.diagnostics() << '\n';
    }
    return report.ok() ? kOk : kVerification;
}

int cmd_augs(const Options& o, Io& io)
{
    Dga d = load(o.file, !o.no_verify, io);
    const auto q = parse_uint(o.q, "field order");
    RhoPoint rho = parse_rho(o.rho, q, d.ring().h1_rank());
    Dga s = specialize(d, rho);
    auto augs = enumerate_augmentations(s, o.budget);
    if (o.json) {
        ordered_json j;
        j["schema"] = 1;
        j["q"] = q;
        j["rho"] = rho.values;
        j["count"] = augs.size();
        ordered_json list = ordered_json::array();
        for (const auto& a : augs)
            list.push_back(aug_to_json(s, a));
        j["augmentations"] = std::move(list);
        io.out << j.dump(2) << '\n';
    } else {
        io.out << "q=" << q;
        if (d.ring().h1_rank() > 0)
            io.out << " rho=" << point_to_string(rho);
        io.out << '\n' << "augmentations: " << augs.size() << '\n';
        for (const auto& a : augs)
            io.out << "  " << aug_to_string(s, a) << '\n';
    }
    return kOk;
}

int cmd_augvar(const Options& o, Io& io)
{
    if (o.emit == o.count)
        throw StructuralError("augvar needs exactly one of --emit or --count");
    Dga d = load(o.file, !o.no_verify, io);
    if (o.emit) {
        auto sys = augvar_system(d);
        if (o.json) {
            ordered_json j;
            j["schema"] = 1;
            ordered_json eqs = ordered_json::array();
            for (const auto& e : sys.equations)
                eqs.push_back(e.to_string());
            j["equations"] = std::move(eqs);
            io.out << j.dump(2) << '\n';
        } else {
            io.out << sys.to_string();
        }
        return kOk;
    }
    const auto q = parse_uint(o.q, "field order");
    auto result = augvar_count(d, q, o.points, o.budget);
    if (o.json) {
        ordered_json j;
        j["schema"] = 1;
        j["q"] = q;
        j["count"] = result.count;
        j["total_points"] = result.total_points;
        j["note"] = "point count of the defining conditions";
        if (result.points) {
            ordered_json pts = ordered_json::array();
            for (const auto& p : *result.points)
                pts.push_back(p.values);
            j["points"] = std::move(pts);
        }
        io.out << j.dump(2) << '\n';
    } else {
        io.out << "augvar count at q=" << q << ": " << result.count << " of " << result.total_points
               << " points (point count of the defining conditions)\n";
        if (q == 2 && d.ring().h1_rank() > 0)
            io.out << "note: (F2^*)^rank is a single point; the count is degenerate\n";
        if (result.points)
            for (const auto& p : *result.points)
                io.out << "  " << point_to_string(p) << '\n';
    }
    return kOk;
}

int cmd_linhom(const Options& o, Io& io)
{
    Dga d = load(o.file, !o.no_verify, io);
    const auto q = parse_uint(o.q, "field order");
    RhoPoint rho = parse_rho(o.rho, q, d.ring().h1_rank());
    Dga s = specialize(d, rho);
    std::vector<Augmentation> augs;
    if (!o.aug.empty())
        augs.push_back(parse_aug(o.aug, s));
    else
        augs = enumerate_augmentations(s, o.budget);

    ordered_json list = ordered_json::array();
    if (!o.json) {
        io.out << "q=" << q;
        if (d.ring().h1_rank() > 0)
            io.out << " rho=" << point_to_string(rho);
        io.out << '\n';
        if (augs.empty())
            io.out << "no augmentations\n";
    }
    for (const auto& eps : augs) {
        auto betti = homology_betti(linear_part(twist(s, eps)));
        if (o.json) {
            ordered_json j;
            j["augmentation"] = aug_to_json(s, eps);
            j["betti"] = betti_json(betti);
            list.push_back(std::move(j));
        } else {
            io.out << "  " << aug_to_string(s, eps) << ": " << betti_to_string(betti) << '\n';
        }
    }
    if (o.json) {
        ordered_json j;
        j["schema"] = 1;
        j["q"] = q;
        j["rho"] = rho.values;
        j["linearizations"] = std::move(list);
        io.out << j.dump(2) << '\n';
    }
    return kOk;
}

int cmd_compare(const Options& o, Io& io)
{
    Dga a = load(o.file, !o.no_verify, io);
    Dga b = load(o.file2, !o.no_verify, io);
    auto qs = parse_q_list(o.q);
    FingerprintOptions fo;
    fo.budget = o.budget;
    auto fa = fingerprint(a, qs, fo);
    auto fb = fingerprint(b, qs, fo);
    auto verdict = compare_fingerprints(fa, fb, o.mixed_shift);
    if (o.json) {
        ordered_json j;
        j["schema"] = 1;
        j["distinguished"] = verdict.distinguished;
        j["witness"] = verdict.distinguished ? ordered_json(verdict.witness) : ordered_json(nullptr);
        j["mixed_shift"] = o.mixed_shift;
        j["fingerprints"] = {ordered_json::parse(fa.to_json()), ordered_json::parse(fb.to_json())};
        io.out << j.dump(2) << '\n';
    } else if (verdict.distinguished) {
        io.out << "distinguished: " << verdict.witness << '\n';
    } else {
        io.out << "not distinguished\n";
    }
    if (o.expect_distinct && !verdict.distinguished)
        return kVerdictNegative;
    return kOk;
}

int cmd_stabilize(const Options& o, Io& io)
{
    Dga d = load(o.file, !o.no_verify, io);
    Dga s = [&] {
        if (o.names.empty())
            return stabilize(d, o.deg);
        auto names = split_commas(o.names);
        if (names.size() != 2)
            throw StructuralError("--names takes two comma-separated names");
        return stabilize(d, o.deg, {names[0], names[1]});
    }();
    io.out << render_dga(s);
    return kOk;
}

int cmd_grade(const Options& o, Io& io)
{
    auto r = CappingRecord::make(o.down, o.up, o.index);
    if (o.json) {
        ordered_json j;
        j["schema"] = 1;
        j["maslov"] = maslov_of_loop(o.down, o.up);
        j["degree"] = chord_degree(r);
        io.out << j.dump(2) << '\n';
    } else {
        io.out << chord_degree(r) << '\n';
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    Io io{in, out, err};
    Options o;
    CLI::App app{"Exact computations with Legendrian contact homology DGAs", "lchdga"};
    app.require_subcommand(1);

    auto* check = app.add_subcommand("check", "Verify a DGA (degree -1, d^2 = 0) and report properties");
    check->add_option("FILE", o.file, "DGA file or - for stdin")->required();
    add_common(check, o);

    auto* augs = app.add_subcommand("augs", "Enumerate augmentations over F_q");
    augs->add_option("--q", o.q, "Field order")->required();
    augs->add_option("--rho", o.rho, "Point v1,v2,... of (F_q^*)^rank; default all ones");
    augs->add_option("FILE", o.file)->required();
    add_common(augs, o);

    auto* augvar = app.add_subcommand("augvar", "Augmentation variety: equations or point count");
    augvar->add_flag("--emit", o.emit, "Print the defining equations");
    augvar->add_flag("--count", o.count, "Count points over F_q by brute force");
    augvar->add_option("--q", o.q, "Field order (with --count)");
    augvar->add_flag("--points", o.points, "List the points (with --count)");
    augvar->add_option("FILE", o.file)->required();
    add_common(augvar, o);

    auto* linhom = app.add_subcommand("linhom", "Linearized homology over F_q");
    linhom->add_option("--q", o.q, "Field order")->required();
    linhom->add_option("--rho", o.rho, "Point v1,v2,... of (F_q^*)^rank; default all ones");
    linhom->add_option("--aug", o.aug, "Augmentation name=value,...; default all augmentations");
    linhom->add_option("FILE", o.file)->required();
    add_common(linhom, o);

    auto* compare = app.add_subcommand("compare", "Try to distinguish two DGAs by their invariants");
    compare->add_option("--q", o.q, "Comma-separated field orders")->required();
    compare->add_flag("--mixed-shift", o.mixed_shift, "Allow a uniform degree shift of mixed chords");
    compare->add_flag("--expect-distinct", o.expect_distinct, "Exit 1 when not distinguished");
    compare->add_option("FILE1", o.file)->required();
    compare->add_option("FILE2", o.file2)->required();
    add_common(compare, o);

    auto* stab = app.add_subcommand("stabilize", "Stabilize in degree J");
    stab->add_option("--deg", o.deg, "Degree j of the new generator a (|b| = j-1)")->required();
    stab->add_option("--names", o.names, "Names a,b of the new generators");
    stab->add_option("FILE", o.file)->required();
    add_common(stab, o);

    auto* fixture = app.add_subcommand("fixture", "Print a built-in DGA");
    fixture->require_subcommand(1);
    fixture->add_option("--char", o.characteristic, "Coefficient characteristic (0 for Z)");
    auto* lgk = fixture->add_subcommand("lgk", "Genus-g surface with k knotted handles");
    lgk->add_option("--g", o.g)->required();
    lgk->add_option("--k", o.k)->required();
    lgk->add_option("--char", o.characteristic, "Coefficient characteristic (0 for Z)");
    auto* fiber = fixture->add_subcommand("fiberlink", "Link with 2k mixed chords and zero differential");
    fiber->add_option("--k", o.k)->required();
    fiber->add_option("--char", o.characteristic, "Coefficient characteristic (0 for Z)");
    auto* knotsphere = fixture->add_subcommand("knotsphere", "Knotted sphere linked with a sphere");
    knotsphere->add_option("--char", o.characteristic, "Coefficient characteristic (0 for Z)");
    auto* stdsphere = fixture->add_subcommand("stdsphere", "Standard sphere with one chord");
    stdsphere->add_option("--char", o.characteristic, "Coefficient characteristic (0 for Z)");

    auto* grade = app.add_subcommand("grade", "Degree of a chord from capping-path data");
    grade->add_option("--down", o.down, "Downward cusp crossings D")->required();
    grade->add_option("--up", o.up, "Upward cusp crossings U")->required();
    grade->add_option("--index", o.index, "Morse index of the height difference")->required();
    grade->add_flag("--json", o.json, "Emit JSON (schema 1)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "lchdga: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (check->parsed())
            return cmd_check(o, io);
        if (augs->parsed())
            return cmd_augs(o, io);
        if (augvar->parsed())
            return cmd_augvar(o, io);
        if (linhom->parsed())
            return cmd_linhom(o, io);
        if (compare->parsed())
            return cmd_compare(o, io);
        if (stab->parsed())
            return cmd_stabilize(o, io);
        if (grade->parsed())
            return cmd_grade(o, io);
        if (fixture->parsed()) {
            if (lgk->parsed())
                out << render_dga(fixture_Lgk(o.g, o.k, o.characteristic));
            else if (fiber->parsed())
                out << render_dga(fixture_fiber_link(o.k, o.characteristic));
            else if (knotsphere->parsed())
                out << render_dga(fixture_knot_sphere_link(o.characteristic));
            else
                out << render_dga(fixture_std_sphere(o.characteristic));
            return kOk;
        }
    } catch (const Exit& e) {
        return e.code;
    } catch (const ResourceError& e) {
        err << "lchdga: budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const Error& e) {
        err << "lchdga: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace lch::cli
