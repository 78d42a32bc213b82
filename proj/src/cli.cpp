#include "sgspectra/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "sgspectra/error.hpp"
#include "sgspectra/iso.hpp"
#include "sgspectra/products.hpp"
#include "sgspectra/search.hpp"
#include "sgspectra/spectral.hpp"

namespace sgs::cli {

namespace {

using nlohmann::json;

struct Outcome {
    std::string status = "ok";  // "ok" | "refuted"
    json data = json::object();
    std::string human;
};

// Eigenvalues carry 12 significant digits in both output modes.
double round12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::string format12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

json eigenvalue_list(const std::vector<double>& values) {
    json a = json::array();
    for (double v : values) a.push_back(round12(v));
    return a;
}

std::string eigenvalue_line(const std::vector<double>& values) {
    std::string line;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) line += " ";
        line += format12(values[i]);
    }
    return line;
}

json witness_json(const IsoWitness& w) {
    return json{{"permutation", w.permutation}, {"switch_set", w.switch_set}};
}

std::string witness_human(const IsoWitness& w) {
    std::ostringstream os;
    os << "permutation:";
    for (int p : w.permutation) os << " " << p;
    os << "\nswitch set:";
    for (int v : w.switch_set) os << " " << v;
    if (w.switch_set.empty()) os << " (empty)";
    return os.str();
}

std::vector<int> parse_csv_ints(const std::string& csv, const std::string& what) {
    std::vector<int> out;
    std::string tok;
    std::istringstream ss(csv);
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stoi(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw Error("usage", "cannot parse " + what + " entry \"" + tok + "\"");
        }
    }
    if (out.empty()) throw Error("usage", what + " must be nonempty");
    return out;
}

RootedList load_rooted_list(const std::vector<std::string>& files, const std::vector<int>& roots) {
    if (files.size() != roots.size())
        throw Error("usage", "--root needs one entry per input file (" +
                                 std::to_string(files.size()) + " files, " +
                                 std::to_string(roots.size()) + " roots)");
    RootedList list;
    for (size_t i = 0; i < files.size(); ++i)
        list.emplace_back(read_sg_file(files[i]), roots[i]);
    return list;
}

std::string graph_written(const std::string& out_file, const SignedGraph& g) {
    write_sg_file(out_file, g);
    return out_file;
}

Outcome do_spectrum(const std::string& file) {
    SignedGraph g = read_sg_file(file);
    Spectrum s = eigenvalues(g);
    Outcome r;
    r.data = {{"n", g.order()},
              {"m", g.edge_count()},
              {"eigenvalues", eigenvalue_list(s.values)},
              {"charpoly", s.source_poly->to_string()}};
    r.human = "n: " + std::to_string(g.order()) + "\nm: " + std::to_string(g.edge_count()) +
              "\neigenvalues: " + eigenvalue_line(s.values) +
              "\ncharpoly: " + s.source_poly->to_string();
    return r;
}

Outcome do_charpoly(const std::string& file) {
    SignedGraph g = read_sg_file(file);
    IntPolynomial p = char_poly(g);
    Outcome r;
    r.data = {{"n", g.order()}, {"m", g.edge_count()}, {"charpoly", p.to_string()}};
    r.human = "charpoly: " + p.to_string();
    return r;
}

Outcome do_check_sym_spectrum(const std::string& file) {
    SignedGraph g = read_sg_file(file);
    bool sym = has_symmetric_spectrum(g);
    Outcome r;
    r.status = sym ? "ok" : "refuted";
    r.data = {{"symmetric_spectrum", sym}};
    r.human = std::string("symmetric spectrum: ") + (sym ? "yes" : "no");
    return r;
}

Outcome do_check_sign_symmetric(const std::string& file, int limit, bool allow_clique) {
    SignedGraph g = read_sg_file(file);
    Outcome r;
    if (g.order() > limit && allow_clique) {
        CliqueRefutation c = sign_symmetry_clique_check(g, limit);
        if (c == CliqueRefutation::refuted) {
            r.status = "refuted";
            r.data = {{"sign_symmetric", false}, {"method", "clique-restriction"}};
            r.human = "sign-symmetric: no (unique maximum clique restriction differs from negation)";
            return r;
        }
        throw Error("limit", "clique restriction inconclusive and graph exceeds the search limit");
    }
    auto w = is_sign_symmetric(g, limit);
    if (w) {
        r.data = {{"sign_symmetric", true}, {"witness", witness_json(*w)}};
        r.human = "sign-symmetric: yes\n" + witness_human(*w);
    } else {
        r.status = "refuted";
        r.data = {{"sign_symmetric", false}};
        r.human = "sign-symmetric: no";
    }
    return r;
}

Outcome do_check_switching_iso(const std::string& fa, const std::string& fb, int limit) {
    auto w = are_switching_isomorphic(read_sg_file(fa), read_sg_file(fb), limit);
    Outcome r;
    if (w) {
        r.data = {{"switching_isomorphic", true}, {"witness", witness_json(*w)}};
        r.human = "switching isomorphic: yes\n" + witness_human(*w);
    } else {
        r.status = "refuted";
        r.data = {{"switching_isomorphic", false}};
        r.human = "switching isomorphic: no";
    }
    return r;
}

Outcome do_check_iso(const std::string& fa, const std::string& fb) {
    auto w = are_isomorphic(read_sg_file(fa), read_sg_file(fb));
    Outcome r;
    if (w) {
        r.data = {{"isomorphic", true}, {"witness", witness_json(*w)}};
        r.human = "isomorphic: yes\n" + witness_human(*w);
    } else {
        r.status = "refuted";
        r.data = {{"isomorphic", false}};
        r.human = "isomorphic: no";
    }
    return r;
}

Outcome do_check_cospectral(const std::string& fa, const std::string& fb) {
    SignedGraph a = read_sg_file(fa), b = read_sg_file(fb);
    bool eq = are_cospectral(a, b);
    Outcome r;
    r.status = eq ? "ok" : "refuted";
    r.data = {{"cospectral", eq}};
    if (eq) r.data["charpoly"] = char_poly(a).to_string();
    r.human = std::string("cospectral: ") + (eq ? "yes" : "no");
    return r;
}

Outcome do_check_coiso(const std::vector<std::string>& files, const std::string& roots_csv) {
    if (files.size() % 2 != 0)
        throw Error("usage", "coiso needs an even number of files: first half list one, second half list two");
    auto roots = parse_csv_ints(roots_csv, "--root");
    RootedList all = load_rooted_list(files, roots);
    size_t half = files.size() / 2;
    RootedList h1(all.begin(), all.begin() + half);
    RootedList h2(all.begin() + half, all.end());
    bool ok = check_coiso(h1, h2);
    Outcome r;
    r.status = ok ? "ok" : "refuted";
    r.data = {{"coiso", ok}};
    r.human = std::string("coiso condition: ") + (ok ? "holds" : "fails");
    return r;
}

Basis load_basis(const std::string& inline_csv, const std::string& file) {
    if (inline_csv.empty() == file.empty())
        throw Error("usage", "give exactly one of --basis and --basis-file");
    if (!inline_csv.empty()) return Basis::parse(inline_csv);
    std::ifstream in(file);
    if (!in) throw Error("io", "cannot open " + file);
    return Basis::read(in);
}

Outcome do_neps(const std::vector<std::string>& files, const Basis& b,
                const std::string& out_file) {
    std::vector<SignedGraph> factors;
    for (const auto& f : files) factors.push_back(read_sg_file(f));
    SignedGraph p = neps(factors, b);
    Outcome r;
    r.data = {{"n", p.order()},
              {"m", p.edge_count()},
              {"negative_edges", p.negative_edge_count()},
              {"basis", b.to_string()}};
    r.human = "neps: " + std::to_string(p.order()) + " vertices, " +
              std::to_string(p.edge_count()) + " edges (" +
              std::to_string(p.negative_edge_count()) + " negative)";
    if (!out_file.empty()) {
        r.data["out"] = graph_written(out_file, p);
        r.human += "\nwritten: " + out_file;
    }
    return r;
}

Outcome do_neps_certify(const std::vector<std::string>& files, const Basis& b) {
    std::vector<SignedGraph> factors;
    for (const auto& f : files) factors.push_back(read_sg_file(f));
    Certificate c = neps_symmetry_certificate(factors, b);
    bool ok = c == Certificate::certified;
    Outcome r;
    r.status = ok ? "ok" : "refuted";
    r.data = {{"certificate", ok ? "certified" : "not_certified"},
              {"odd_basis", is_odd_basis(b)}};
    auto inv = find_involution(factors);
    if (inv) r.data["involution"] = inv->map();
    r.human = std::string("certificate: ") + (ok ? "certified" : "not_certified");
    return r;
}

Outcome do_rooted_product(const std::string& base_file, const std::vector<std::string>& block_files,
                          const std::string& roots_csv, int copies, const std::string& out_file) {
    SignedGraph base = read_sg_file(base_file);
    auto roots = parse_csv_ints(roots_csv, "--root");
    RootedList blocks;
    if (copies > 0 || block_files.size() == 1) {
        if (block_files.size() != 1 || roots.size() != 1)
            throw Error("usage", "uniform rooted product takes one block file and one root");
        int n = copies > 0 ? copies : base.order();
        if (n != base.order())
            throw Error("usage", "--copies must equal the base vertex count " +
                                     std::to_string(base.order()));
        RootedSignedGraph block(read_sg_file(block_files[0]), roots[0]);
        blocks.assign(n, block);
    } else {
        blocks = load_rooted_list(block_files, roots);
    }
    SignedGraph p = rooted_product(base, blocks);
    IntPolynomial cp = rooted_product_char_poly(base, blocks);
    Outcome r;
    r.data = {{"n", p.order()},
              {"m", p.edge_count()},
              {"negative_edges", p.negative_edge_count()},
              {"charpoly", cp.to_string()}};
    r.human = "rooted product: " + std::to_string(p.order()) + " vertices, " +
              std::to_string(p.edge_count()) + " edges\ncharpoly: " + cp.to_string();
    if (!out_file.empty()) {
        r.data["out"] = graph_written(out_file, p);
        r.human += "\nwritten: " + out_file;
    }
    return r;
}

Outcome do_rooted_certify(const std::string& base_file, const std::string& block_file,
                          const std::string& roots_csv) {
    SignedGraph base = read_sg_file(base_file);
    auto roots = parse_csv_ints(roots_csv, "--root");
    if (roots.size() != 1) throw Error("usage", "rooted-certify takes a single root");
    RootedSignedGraph block(read_sg_file(block_file), roots[0]);
    Certificate c = rooted_symmetry_certificate(base, block);
    bool ok = c == Certificate::certified;
    Outcome r;
    r.status = ok ? "ok" : "refuted";
    r.data = {{"certificate", ok ? "certified" : "not_certified"}};
    r.human = std::string("certificate: ") + (ok ? "certified" : "not_certified");
    return r;
}

Outcome do_search_cospectral_rooted(int n, int limit, const std::string& out_dir) {
    auto pairs = find_cospectrally_rooted_pairs(n, limit);
    Outcome r;
    json jpairs = json::array();
    for (size_t id = 0; id < pairs.size(); ++id) {
        const auto& p = pairs[id];
        json jp = {{"id", id},
                   {"whole_poly", p.key.whole_poly.to_string()},
                   {"deleted_poly", p.key.deleted_poly.to_string()},
                   {"a", {{"root", p.first.root}, {"n", p.first.graph.order()}}},
                   {"b", {{"root", p.second.root}, {"n", p.second.graph.order()}}}};
        jpairs.push_back(std::move(jp));
    }
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (size_t id = 0; id < pairs.size(); ++id) {
            char name[32];
            std::snprintf(name, sizeof name, "pair_%04zu", id);
            std::string fa = out_dir + "/" + name + "_a.sg";
            std::string fb = out_dir + "/" + name + "_b.sg";
            write_sg_file(fa, pairs[id].first.graph);
            write_sg_file(fb, pairs[id].second.graph);
            jpairs[id]["a"]["file"] = fa;
            jpairs[id]["b"]["file"] = fb;
        }
        std::ofstream index(out_dir + "/index.json");
        if (!index) throw Error("io", "cannot write " + out_dir + "/index.json");
        index << json{{"n", n}, {"pairs", jpairs}}.dump(2) << "\n";
    }
    r.status = pairs.empty() ? "refuted" : "ok";
    r.data = {{"n", n}, {"count", pairs.size()}, {"pairs", jpairs}};
    if (!out_dir.empty()) r.data["out"] = out_dir;
    r.human = "cospectrally rooted pairs on " + std::to_string(n) +
              " vertices: " + std::to_string(pairs.size());
    return r;
}

std::function<bool(const SignedGraph&)> named_predicate(const std::string& name, int limit,
                                                        const SignedGraph& ground) {
    if (name == "sym-spectrum") return [](const SignedGraph& g) { return has_symmetric_spectrum(g); };
    if (name == "sym-not-sign-symmetric") {
        bool bip = has_bipartite_ground(ground);
        return [bip, limit](const SignedGraph& g) {
            return !bip && has_symmetric_spectrum(g) && !is_sign_symmetric(g, limit);
        };
    }
    throw Error("usage", "unknown predicate \"" + name +
                             "\" (choices: sym-spectrum, sym-not-sign-symmetric)");
}

Outcome do_search_signatures(const std::string& ground_file, const std::string& predicate_name,
                             int edge_limit, int search_limit, std::optional<std::uint64_t> seed,
                             int samples, const std::vector<std::string>& include_files,
                             const std::string& out_dir) {
    SignedGraph ground = read_sg_file(ground_file);
    auto predicate = named_predicate(predicate_name, search_limit, ground);

    std::vector<SignedGraph> hits;
    if (seed || samples > 0 || !include_files.empty()) {
        if (!seed) throw Error("usage", "sampling mode requires --seed");
        std::vector<SignedGraph> include;
        for (const auto& f : include_files) include.push_back(read_sg_file(f));
        hits = sample_signatures(ground, predicate, *seed, samples, include, search_limit);
    } else {
        hits = enumerate_signatures(ground, predicate, edge_limit, search_limit);
    }

    Outcome r;
    json jh = json::array();
    for (size_t i = 0; i < hits.size(); ++i) {
        json neg = json::array();
        for (const Edge& e : hits[i].edges())
            if (e.sign < 0) neg.push_back({e.u, e.v});
        json item = {{"negative_edges", neg}};
        if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            char name[32];
            std::snprintf(name, sizeof name, "sig_%04zu.sg", i);
            std::string path = out_dir + "/" + name;
            write_sg_file(path, hits[i]);
            item["file"] = path;
        }
        jh.push_back(std::move(item));
    }
    r.status = hits.empty() ? "refuted" : "ok";
    r.data = {{"predicate", predicate_name}, {"count", hits.size()}, {"hits", jh}};
    if (!out_dir.empty()) r.data["out"] = out_dir;
    r.human = "signature hits (" + predicate_name + "): " + std::to_string(hits.size());
    return r;
}

Outcome do_fixture(const std::string& name, const std::string& out_file) {
    if (name != "sk8") throw Error("usage", "unknown fixture \"" + name + "\" (choices: sk8)");
    SignedGraph g = sk8();
    Outcome r;
    r.data = {{"name", "sk8"},
              {"n", g.order()},
              {"m", g.edge_count()},
              {"negative_edges", g.negative_edge_count()},
              {"charpoly", char_poly(g).to_string()}};
    r.human = "sk8: 8 vertices, 28 edges (9 negative)";
    if (!out_file.empty()) {
        r.data["out"] = graph_written(out_file, g);
        r.human += "\nwritten: " + out_file;
    }
    return r;
}

void emit(std::ostream& out, bool json_mode, const std::string& command, const Outcome& o) {
    if (json_mode)
        out << json{{"command", command}, {"status", o.status}, {"data", o.data}}.dump() << "\n";
    else
        out << o.human << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"signed graph spectra toolkit"};
    app.name("sgspec");
    app.require_subcommand(1);
    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit one JSON object {command,status,data}");

    std::string command;
    std::optional<Outcome> result;
    auto act = [&](const std::string& name, std::function<Outcome()> fn) {
        return [&, name, fn]() {
            command = name;
            result = fn();
        };
    };

    // spectrum / charpoly
    std::string sp_file;
    auto* sp = app.add_subcommand("spectrum", "eigenvalues and exact characteristic polynomial");
    sp->add_option("file", sp_file, ".sg input")->required();
    sp->callback(act("spectrum", [&] { return do_spectrum(sp_file); }));

    std::string cp_file;
    auto* cp = app.add_subcommand("charpoly", "exact characteristic polynomial");
    cp->add_option("file", cp_file, ".sg input")->required();
    cp->callback(act("charpoly", [&] { return do_charpoly(cp_file); }));

    // check group
    auto* check = app.add_subcommand("check", "decision procedures");
    check->require_subcommand(1);

    std::string cs_file;
    auto* cs = check->add_subcommand("sym-spectrum", "exact symmetric-spectrum test");
    cs->add_option("file", cs_file)->required();
    cs->callback(act("check sym-spectrum", [&] { return do_check_sym_spectrum(cs_file); }));

    std::string ss_file;
    int ss_limit = kDefaultSwitchSearchLimit;
    bool ss_clique = false;
    auto* ss = check->add_subcommand("sign-symmetric", "switching isomorphism onto the negation");
    ss->add_option("file", ss_file)->required();
    ss->add_option("--limit", ss_limit, "switch-class search limit (vertices)");
    ss->add_flag("--clique", ss_clique, "allow the unique-maximum-clique refutation above the limit");
    ss->callback(act("check sign-symmetric",
                     [&] { return do_check_sign_symmetric(ss_file, ss_limit, ss_clique); }));

    std::vector<std::string> si_files;
    int si_limit = kDefaultSwitchSearchLimit;
    auto* si = check->add_subcommand("switching-iso", "switching isomorphism with witness");
    si->add_option("files", si_files)->expected(2);
    si->add_option("--limit", si_limit, "search limit (vertices)");
    si->callback(act("check switching-iso",
                     [&] { return do_check_switching_iso(si_files[0], si_files[1], si_limit); }));

    std::vector<std::string> is_files;
    auto* is = check->add_subcommand("iso", "sign-preserving isomorphism with witness");
    is->add_option("files", is_files)->expected(2);
    is->callback(act("check iso", [&] { return do_check_iso(is_files[0], is_files[1]); }));

    std::vector<std::string> co_files;
    auto* co = check->add_subcommand("cospectral", "exact characteristic-polynomial equality");
    co->add_option("files", co_files)->expected(2);
    co->callback(act("check cospectral", [&] { return do_check_cospectral(co_files[0], co_files[1]); }));

    std::vector<std::string> ci_files;
    std::string ci_roots;
    auto* ci = check->add_subcommand("coiso", "indexwise cospectrally-rooted-or-isomorphic");
    ci->add_option("files", ci_files, "first half: list one; second half: list two")->expected(-2);
    ci->add_option("--root", ci_roots, "comma-separated roots, one per file")->required();
    ci->callback(act("check coiso", [&] { return do_check_coiso(ci_files, ci_roots); }));

    // products
    std::vector<std::string> ne_files;
    std::string ne_basis, ne_basis_file, ne_out;
    auto* ne = app.add_subcommand("neps", "NEPS of signed graphs");
    ne->add_option("files", ne_files, "factor .sg files")->expected(-1);
    ne->add_option("--basis", ne_basis, "inline basis, e.g. 10,01");
    ne->add_option("--basis-file", ne_basis_file, "basis file, one 0/1 vector per line");
    ne->add_option("--out", ne_out, "write the product as .sg");
    ne->callback(act("neps", [&] {
        return do_neps(ne_files, load_basis(ne_basis, ne_basis_file), ne_out);
    }));

    std::vector<std::string> nc_files;
    std::string nc_basis, nc_basis_file;
    auto* nc = app.add_subcommand("neps-certify", "sufficient symmetric-spectrum certificate");
    nc->add_option("files", nc_files, "factor .sg files")->expected(-1);
    nc->add_option("--basis", nc_basis, "inline basis, e.g. 10,01");
    nc->add_option("--basis-file", nc_basis_file, "basis file, one 0/1 vector per line");
    nc->callback(act("neps-certify", [&] {
        return do_neps_certify(nc_files, load_basis(nc_basis, nc_basis_file));
    }));

    std::vector<std::string> rp_files;
    std::string rp_roots, rp_out;
    int rp_copies = 0;
    auto* rp = app.add_subcommand("rooted-product", "rooted product of signed graphs");
    rp->add_option("files", rp_files, "base .sg, then block .sg files")->expected(-2);
    rp->add_option("--root", rp_roots, "comma-separated roots, one per block file")->required();
    rp->add_option("--copies", rp_copies, "replicate a single block this many times");
    rp->add_option("--out", rp_out, "write the product as .sg");
    rp->callback(act("rooted-product", [&] {
        return do_rooted_product(rp_files[0], {rp_files.begin() + 1, rp_files.end()}, rp_roots,
                                 rp_copies, rp_out);
    }));

    std::vector<std::string> rc_files;
    std::string rc_roots;
    auto* rc = app.add_subcommand("rooted-certify", "sufficient symmetric-spectrum certificate");
    rc->add_option("files", rc_files, "base .sg and block .sg")->expected(2);
    rc->add_option("--root", rc_roots, "block root")->required();
    rc->callback(act("rooted-certify", [&] { return do_rooted_certify(rc_files[0], rc_files[1], rc_roots); }));

    // search group
    auto* search = app.add_subcommand("search", "desk-scale enumeration");
    search->require_subcommand(1);

    int sc_n = 0, sc_limit = kDefaultEnumerationLimit;
    std::string sc_out;
    auto* sc = search->add_subcommand("cospectral-rooted", "cospectrally rooted graph pairs");
    sc->add_option("--n", sc_n, "vertex count")->required();
    sc->add_option("--limit", sc_limit, "enumeration limit (vertices)");
    sc->add_option("--out", sc_out, "directory for .sg pair files and index.json");
    sc->callback(act("search cospectral-rooted",
                     [&] { return do_search_cospectral_rooted(sc_n, sc_limit, sc_out); }));

    std::string sg_ground, sg_pred = "sym-spectrum", sg_out;
    int sg_edge_limit = kDefaultSignatureEdgeLimit, sg_search_limit = kDefaultSwitchSearchLimit;
    int sg_samples = 0;
    std::optional<std::uint64_t> sg_seed;
    std::vector<std::string> sg_include;
    auto* sg = search->add_subcommand("signatures", "signatures of a ground satisfying a predicate");
    sg->add_option("ground", sg_ground, "ground .sg (signs ignored)")->required();
    sg->add_option("--predicate", sg_pred, "sym-spectrum | sym-not-sign-symmetric");
    sg->add_option("--limit", sg_edge_limit, "full-enumeration edge limit");
    sg->add_option("--dedup-limit", sg_search_limit, "switching-isomorphism dedup limit (vertices)");
    sg->add_option("--seed", sg_seed, "sampling seed (enables sampling mode)");
    sg->add_option("--samples", sg_samples, "number of sampled signatures");
    sg->add_option("--include", sg_include, "signatures to seed the sample pool with (.sg)");
    sg->callback(act("search signatures", [&] {
        return do_search_signatures(sg_ground, sg_pred, sg_edge_limit, sg_search_limit, sg_seed,
                                    sg_samples, sg_include, sg_out);
    }));
    sg->add_option("--out", sg_out, "directory for hit .sg files");

    // fixture
    std::string fx_name, fx_out;
    auto* fx = app.add_subcommand("fixture", "built-in graphs");
    fx->add_option("name", fx_name, "fixture name (sk8)")->required();
    fx->add_option("--out", fx_out, "write as .sg");
    fx->callback(act("fixture", [&] { return do_fixture(fx_name, fx_out); }));

    // Let global flags like --json appear after the subcommand.
    for (auto* sub : app.get_subcommands({})) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands({})) nested->fallthrough();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        Outcome o;
        o.status = "error";
        o.data = {{"code", "usage"}, {"message", e.what()}};
        o.human = std::string("error: ") + e.what();
        emit(json_mode ? out : err, json_mode, command.empty() ? "(none)" : command, o);
        return 2;
    } catch (const Error& e) {
        Outcome o;
        o.status = "error";
        o.data = {{"code", e.code()}, {"message", e.what()}};
        o.human = std::string("error [") + e.code() + "]: " + e.what();
        emit(json_mode ? out : err, json_mode, command.empty() ? "(none)" : command, o);
        return 2;
    } catch (const std::exception& e) {
        Outcome o;
        o.status = "error";
        o.data = {{"code", "internal"}, {"message", e.what()}};
        o.human = std::string("internal error: ") + e.what();
        emit(json_mode ? out : err, json_mode, command.empty() ? "(none)" : command, o);
        return 2;
    }

    if (!result) {
        Outcome o;
        o.status = "error";
        o.data = {{"code", "usage"}, {"message", "no subcommand given"}};
        o.human = "error: no subcommand given";
        emit(json_mode ? out : err, json_mode, "(none)", o);
        return 2;
    }
    emit(out, json_mode, command, *result);
    return result->status == "ok" ? 0 : 1;
}

}  // namespace sgs::cli
