#ifndef EXACTCOMB_TOOLS_CLI_HPP
#define EXACTCOMB_TOOLS_CLI_HPP

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "exactcomb/exactcomb.hpp"

namespace exactcomb::cli {

using json = nlohmann::json;

enum ExitCode : int { kOk = 0, kValidation = 2, kIo = 3 };

/// Unreadable input file.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::optional<std::size_t> max_size;

  std::size_t cap(std::size_t fallback) const { return max_size.value_or(fallback); }
};

/// Text lines plus the same facts as a structured document.
struct Report {
  std::vector<std::string> lines;
  json doc = json::object();

  void line(std::string s) { lines.push_back(std::move(s)); }
};

namespace detail {

inline std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return in;
}

inline bool has_prefix(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

inline std::size_t spec_number(const std::string& s, const std::string& spec) {
  require(!s.empty() && s.size() <= 9 && s.find_first_not_of("0123456789") == std::string::npos,
          ErrorCode::InvalidArgument, "bad size in '" + spec + "'");
  return std::stoul(s);
}

/// File path or "random-eulerian:M" (at most M arcs, drawn from --seed).
inline DirectedMultigraph load_digraph(const std::string& spec, const Globals& g) {
  if (has_prefix(spec, "random-eulerian:")) {
    const std::size_t m = spec_number(spec.substr(16), spec);
    require(m >= 1, ErrorCode::InvalidArgument, "need at least one arc");
    gen::Rng rng(g.seed);
    return gen::random_eulerian_digraph(rng, m);
  }
  auto in = open(spec);
  return io::read_digraph(in);
}

struct LoadedGraph {
  dimers::UndirectedGraph graph;
  std::optional<dimers::PlanarEmbedding> embedding;
};

/// File path, "grid:RxC" or "random-planar:N"; the latter two carry embeddings.
inline LoadedGraph load_graph(const std::string& spec, const std::string& embedding_path, const Globals& g) {
  LoadedGraph out;
  if (has_prefix(spec, "grid:")) {
    const std::string dims = spec.substr(5);
    const auto x = dims.find('x');
    require(x != std::string::npos, ErrorCode::InvalidArgument, "grid spec must be grid:RxC");
    const std::size_t r = spec_number(dims.substr(0, x), spec);
    const std::size_t c = spec_number(dims.substr(x + 1), spec);
    require(r >= 1 && c >= 1 && r * c <= 4096, ErrorCode::InvalidArgument, "grid dimensions out of range");
    out.graph = dimers::grid_graph(r, c);
    out.embedding = dimers::grid_embedding(out.graph, r, c);
  } else if (has_prefix(spec, "random-planar:")) {
    const std::size_t n = spec_number(spec.substr(14), spec);
    require(n >= 1 && n <= 4096, ErrorCode::InvalidArgument, "node count out of range");
    gen::Rng rng(g.seed);
    auto pg = gen::random_planar_graph(rng, n);
    out.graph = std::move(pg.graph);
    out.embedding = std::move(pg.embedding);
  } else {
    auto in = open(spec);
    out.graph = io::read_graph(in);
  }
  if (!embedding_path.empty()) {
    auto in = open(embedding_path);
    out.embedding = io::read_embedding(in, out.graph);
  }
  return out;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream ss(s);
  while (std::getline(ss, cur, sep))
    if (!cur.empty()) parts.push_back(cur);
  return parts;
}

inline std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

inline std::string decimal(const BigRational& q, int digits = 6) {
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(digits) << q.get_d();
  return ss.str();
}

inline const char* boolean(bool b) { return b ? "true" : "false"; }

}  // namespace detail

/// Parses args (without the program name), runs one subcommand, and writes
/// its result to out; diagnostics go to err. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumerative combinatorics", "exactcomb"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--seed", g.seed, "Seed for random-* inputs");
  app.add_option("--max-size", g.max_size, "Override the size cap of exhaustive oracles")->check(CLI::PositiveNumber);

  std::function<Report()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* s = parent->add_subcommand(name, help);
    return s;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->require_subcommand(1);
    return s;
  };

  // option storage shared by the leaves
  unsigned n = 0, alphabet = 2;
  std::size_t count = 0, root = 0, colors = 0;
  std::string word, graph_spec, embedding_path, orientation_path, method = "auto", group_name, weights, shape,
      file, period, type;
  bool enumerate = false, brute = false, oracle = false;

  // --- debruijn ---
  CLI::App* db = group("debruijn", "P_n-cycles (De Bruijn sequences)");
  {
    auto* c = leaf(db, "count", "Number of P_n-cycles");
    c->add_option("--n", n, "Window length")->required()->check(CLI::Range(1u, 30u));
    c->add_option("--alphabet", alphabet, "Alphabet size")->check(CLI::Range(2u, debruijn::kMaxAlphabet));
    c->add_flag("--enumerate", enumerate, "Count by exhaustive search instead (binary, slow)");
    c->callback([&] {
      action = [&] {
        Report r;
        BigInt v;
        std::string how;
        if (enumerate) {
          require(alphabet == 2, ErrorCode::InvalidArgument, "enumeration is binary only");
          v = static_cast<unsigned long>(debruijn::enumerate_pn_cycles(n, static_cast<unsigned>(g.cap(5))).size());
          how = "enumeration";
        } else if (alphabet == 2) {
          v = debruijn::count_pn_cycles(n);
          how = "closed-form";
        } else {
          v = debruijn::count_cycles_via_best(n, alphabet);
          how = "best";
        }
        r.line(v.get_str());
        r.doc = {{"n", n}, {"alphabet", alphabet}, {"count", v.get_str()}, {"method", how}};
        return r;
      };
    });
    auto* gcmd = leaf(db, "generate", "One P_n-cycle (least rotation)");
    gcmd->add_option("--n", n, "Window length")->required()->check(CLI::Range(1u, 30u));
    gcmd->add_option("--alphabet", alphabet, "Alphabet size")->check(CLI::Range(2u, debruijn::kMaxAlphabet));
    gcmd->callback([&] {
      action = [&] {
        Report r;
        const auto w = debruijn::generate_pn_cycle(n, alphabet, g.cap(debruijn::kDefaultEdgeCap));
        r.line(w.to_string());
        r.doc = {{"n", n}, {"alphabet", alphabet}, {"word", w.to_string()}};
        return r;
      };
    });
    auto* chk = leaf(db, "check", "Is the cyclic word a P_n-cycle?");
    chk->add_option("--word", word, "Cyclic word over 0-9a-z")->required();
    chk->add_option("--n", n, "Window length")->required()->check(CLI::Range(1u, 30u));
    chk->add_option("--alphabet", alphabet, "Alphabet size")->check(CLI::Range(2u, debruijn::kMaxAlphabet));
    chk->callback([&] {
      action = [&] {
        Report r;
        const bool ok = debruijn::is_pn_cycle(debruijn::CyclicWord::parse(word), n, alphabet);
        r.line(detail::boolean(ok));
        r.doc = {{"word", word}, {"n", n}, {"alphabet", alphabet}, {"is_cycle", ok}};
        return r;
      };
    });
  }

  // --- euler ---
  CLI::App* eu = group("euler", "Euler tours and arborescences of digraphs");
  {
    auto* c = leaf(eu, "count", "Euler tours by the BEST theorem");
    c->add_option("--graph", graph_spec, "Digraph file or random-eulerian:M")->required();
    c->callback([&] {
      action = [&] {
        Report r;
        const auto dg = detail::load_digraph(graph_spec, g);
        const BigInt v = euler::count_euler_tours(dg);
        r.line(v.get_str());
        r.doc = {{"nodes", dg.node_count()}, {"arcs", dg.arc_count()}, {"tours", v.get_str()}};
        return r;
      };
    });
    auto* a = leaf(eu, "arborescences", "Arborescences toward a root (matrix-tree)");
    a->add_option("--graph", graph_spec, "Digraph file or random-eulerian:M")->required();
    a->add_option("--root", root, "Root node")->required();
    a->callback([&] {
      action = [&] {
        Report r;
        const auto dg = detail::load_digraph(graph_spec, g);
        const BigInt v = euler::count_arborescences(dg, root);
        r.line(v.get_str());
        r.doc = {{"root", root}, {"arborescences", v.get_str()}};
        return r;
      };
    });
    auto* o = leaf(eu, "oracle", "Euler tours by exhaustive enumeration");
    o->add_option("--graph", graph_spec, "Digraph file or random-eulerian:M")->required();
    o->callback([&] {
      action = [&] {
        Report r;
        const auto dg = detail::load_digraph(graph_spec, g);
        const BigInt v = euler::enumerate_euler_tours(dg, g.cap(euler::kDefaultOracleArcCap));
        r.line(v.get_str());
        r.doc = {{"nodes", dg.node_count()}, {"arcs", dg.arc_count()}, {"tours", v.get_str()}};
        return r;
      };
    });
  }

  // --- dimers ---
  CLI::App* dm = group("dimers", "Perfect matchings and Pfaffian orientations");
  {
    auto* c = leaf(dm, "count", "Number of perfect matchings");
    c->add_option("--graph", graph_spec, "Graph file, grid:RxC or random-planar:N")->required();
    c->add_option("--embedding", embedding_path, "Embedding file (rotation system)");
    c->add_option("--method", method, "fkt, brute or auto")->check(CLI::IsMember({"auto", "fkt", "brute"}));
    c->callback([&] {
      action = [&] {
        Report r;
        const auto lg = detail::load_graph(graph_spec, embedding_path, g);
        const bool fkt = method == "fkt" || (method == "auto" && lg.embedding);
        BigInt v;
        if (fkt) {
          require(lg.embedding.has_value(), ErrorCode::InvalidEmbedding, "the fkt method needs an embedding");
          v = dimers::count_matchings_fkt(lg.graph, dimers::kasteleyn_orient(lg.graph, *lg.embedding));
        } else {
          v = dimers::matching_weight_sum_bruteforce(lg.graph, g.cap(dimers::kDefaultBruteforceCap));
        }
        r.line(v.get_str());
        r.doc = {{"nodes", lg.graph.node_count()}, {"edges", lg.graph.edge_count()},
                 {"method", fkt ? "fkt" : "brute"}, {"matchings", v.get_str()}};
        return r;
      };
    });
    auto* o = leaf(dm, "orient", "Kasteleyn orientation of a plane graph");
    o->add_option("--graph", graph_spec, "Graph file, grid:RxC or random-planar:N")->required();
    o->add_option("--embedding", embedding_path, "Embedding file (rotation system)");
    o->callback([&] {
      action = [&] {
        Report r;
        const auto lg = detail::load_graph(graph_spec, embedding_path, g);
        require(lg.embedding.has_value(), ErrorCode::InvalidEmbedding, "orientation needs an embedding");
        const auto ori = dimers::kasteleyn_orient(lg.graph, *lg.embedding);
        std::ostringstream ss;
        io::write_orientation(ss, lg.graph, ori);
        std::istringstream back(ss.str());
        std::string l;
        json arcs = json::array();
        while (std::getline(back, l)) r.line(l);
        for (const auto& e : lg.graph.edges())
          arcs.push_back(ori.eps(e.u, e.v) > 0 ? json::array({e.u, e.v}) : json::array({e.v, e.u}));
        r.doc = {{"nodes", lg.graph.node_count()}, {"arcs", arcs}};
        return r;
      };
    });
    auto* p = leaf(dm, "check-pfaffian", "Is the orientation Pfaffian? (exhaustive)");
    p->add_option("--graph", graph_spec, "Graph file, grid:RxC or random-planar:N")->required();
    p->add_option("--embedding", embedding_path, "Embedding file");
    p->add_option("--orientation", orientation_path, "Orientation file (default: Kasteleyn's)");
    p->callback([&] {
      action = [&] {
        Report r;
        const auto lg = detail::load_graph(graph_spec, embedding_path, g);
        dimers::Orientation ori;
        if (!orientation_path.empty()) {
          auto in = detail::open(orientation_path);
          ori = io::read_orientation(in);
        } else {
          require(lg.embedding.has_value(), ErrorCode::InvalidArgument, "give --orientation or an embedded graph");
          ori = dimers::kasteleyn_orient(lg.graph, *lg.embedding);
        }
        const bool ok = dimers::is_pfaffian_orientation(lg.graph, ori, g.cap(dimers::kDefaultPfaffianCheckCap));
        r.line(detail::boolean(ok));
        r.doc = {{"nodes", lg.graph.node_count()}, {"pfaffian", ok}};
        return r;
      };
    });
  }

  // --- polya ---
  CLI::App* po = group("polya", "Cycle indices and pattern inventories");
  {
    const std::string group_help = "cube-faces, cube-vertices, cube-edges, cyclic:N, dihedral:N or symmetric:N";
    auto* ci = leaf(po, "cycle-index", "Cycle index of a permutation group");
    ci->add_option("--group", group_name, group_help)->required();
    ci->callback([&] {
      action = [&] {
        Report r;
        const auto grp = polya::named_group(group_name);
        const auto poly = polya::cycle_index(grp);
        r.line(poly.to_string());
        r.doc = {{"group", group_name}, {"order", grp.order()}, {"cycle_index", poly.to_string()}};
        return r;
      };
    });
    auto* c = leaf(po, "count", "Colourings up to symmetry");
    c->add_option("--group", group_name, group_help)->required();
    c->add_option("--colors", colors, "Number of colours")->required();
    c->callback([&] {
      action = [&] {
        Report r;
        const auto grp = polya::named_group(group_name);
        const BigInt v = polya::count_patterns(polya::cycle_index(grp), colors);
        r.line(v.get_str());
        r.doc = {{"group", group_name}, {"colors", colors}, {"patterns", v.get_str()}};
        return r;
      };
    });
    auto* inv = leaf(po, "inventory", "Pattern inventory with colours as indeterminates");
    inv->add_option("--group", group_name, group_help)->required();
    inv->add_option("--weights", weights, "Comma-separated colour names, e.g. z,w")->required();
    inv->add_flag("--oracle", oracle, "Sum over explicitly enumerated orbits instead");
    inv->callback([&] {
      action = [&] {
        Report r;
        const auto grp = polya::named_group(group_name);
        const auto names = detail::split(weights, ',');
        const auto w = polya::colors_as_variables(names);
        const auto poly = oracle ? polya::orbit_inventory_oracle(grp, w, g.cap(polya::kDefaultColoringCap))
                                 : polya::pattern_inventory(polya::cycle_index(grp), w);
        r.line(poly.to_string());
        r.doc = {{"group", group_name}, {"colors", names}, {"inventory", poly.to_string()},
                 {"method", oracle ? "orbits" : "cycle-index"}};
        return r;
      };
    });
  }

  // --- shapes ---
  CLI::App* sh = group("shapes", "Permutations with prescribed up/down shape");
  {
    auto* p = leaf(sh, "psi", "Permutations of a shape, e.g. --shape +-+-");
    p->add_option("--shape", shape, "String of + (ascent) and - (descent)")->required();
    p->add_flag("--brute", brute, "Count by listing permutations");
    p->callback([&] {
      action = [&] {
        Report r;
        const auto q = shapes::parse_shape(shape);
        const BigInt v = brute ? shapes::psi_bruteforce(q, g.cap(shapes::kBruteforceDegreeCap)) : shapes::psi(q);
        r.line(v.get_str());
        r.doc = {{"shape", shape}, {"degree", q.size() + 1}, {"psi", v.get_str()}};
        return r;
      };
    });
    auto* e = leaf(sh, "euler", "Euler number E_n");
    e->add_option("--n", n, "Index")->required()->check(CLI::Range(0u, 2000u));
    e->callback([&] {
      action = [&] {
        Report r;
        const BigInt v = shapes::euler_number(n);
        r.line(v.get_str());
        r.doc = {{"n", n}, {"euler", v.get_str()}};
        return r;
      };
    });
    auto* nv = leaf(sh, "niven", "Is the alternating shape the unique maximum?");
    nv->add_option("--n", n, "Degree")->required()->check(CLI::Range(2u, static_cast<unsigned>(shapes::kNivenDegreeCap)));
    nv->callback([&] {
      action = [&] {
        Report r;
        const bool ok = shapes::niven_maximality(n);
        r.line(detail::boolean(ok));
        r.doc = {{"n", n}, {"maximal", ok}};
        return r;
      };
    });
  }

  // --- trees ---
  CLI::App* tr = group("trees", "Plane rooted trees and binary plane trees");
  {
    auto* c = leaf(tr, "count", "Plane trees with n nodes");
    c->add_option("--n", n, "Nodes")->required()->check(CLI::Range(1u, 100000u));
    c->callback([&] {
      action = [&] {
        Report r;
        const BigInt v = trees::count_plane_trees(n);
        r.line(v.get_str());
        r.doc = {{"n", n}, {"trees", v.get_str()}};
        return r;
      };
    });
    auto* cd = leaf(tr, "codes", "UD code of every n-node tree with the KE code of its binary image");
    cd->add_option("--n", n, "Nodes")->required()->check(CLI::Range(1u, 100000u));
    cd->callback([&] {
      action = [&] {
        Report r;
        json rows = json::array();
        for (const auto& t : trees::enumerate_plane_trees(n, g.cap(trees::kEnumerationCap))) {
          const std::string ud = trees::ud_encode(t);
          const std::string ke = trees::ke_encode(trees::plane_to_binary(t));
          r.line((ud.empty() ? "-" : ud) + " " + ke);
          rows.push_back({{"ud", ud}, {"ke", ke}});
        }
        r.doc = {{"n", n}, {"codes", rows}};
        return r;
      };
    });
    auto* h = leaf(tr, "avg-height", "Exact mean height (edges) over n-node trees");
    h->add_option("--n", n, "Nodes")->required()->check(CLI::Range(1u, 100000u));
    h->callback([&] {
      action = [&] {
        Report r;
        const BigRational v = trees::average_height(n, g.cap(trees::kAverageHeightCap));
        r.line(exactcomb::to_string(v));
        r.line(detail::decimal(v));
        r.doc = {{"n", n}, {"exact", exactcomb::to_string(v)}, {"decimal", detail::decimal(v)}};
        return r;
      };
    });
  }

  // --- classics ---
  CLI::App* cl = group("classics", "Representatives, linear spaces, integer bases, factorizations");
  {
    auto* rp = leaf(cl, "reps", "Common system of representatives of two partitions");
    rp->add_option("--sets", file, "Partition file (ground N / U ... / B ...)")->required();
    rp->callback([&] {
      action = [&] {
        Report r;
        auto in = detail::open(file);
        const auto inst = io::read_rep_instance(in);
        const auto res = classics::common_representatives(inst);
        if (res.success) {
          r.line(detail::join(res.representatives));
          r.doc = {{"success", true}, {"representatives", res.representatives}};
        } else {
          const char* inner = res.swapped ? "U" : "B";
          const char* outer = res.swapped ? "B" : "U";
          const auto& inner_ids = res.swapped ? res.cert_u : res.cert_b;
          const auto& outer_ids = res.swapped ? res.cert_b : res.cert_u;
          r.line("none");
          r.line(std::to_string(outer_ids.size()) + " " + outer + "-blocks (" + detail::join(outer_ids) + ") contain " +
                 std::to_string(inner_ids.size()) + " " + inner + "-blocks (" + detail::join(inner_ids) + ")");
          r.doc = {{"success", false}, {"cert_u", res.cert_u}, {"cert_b", res.cert_b}, {"swapped", res.swapped}};
        }
        return r;
      };
    });
    auto* ls = leaf(cl, "linear-space", "Validate a linear space and classify m = n");
    ls->add_option("--file", file, "Linear-space file (points N / one line per row)")->required();
    ls->callback([&] {
      action = [&] {
        Report r;
        auto in = detail::open(file);
        const auto rep = classics::linear_space_validate(io::read_linear_space(in));
        std::string l = "m=" + std::to_string(rep.m) + " n=" + std::to_string(rep.n) +
                        " bound=" + (rep.bound_holds ? "holds" : "fails") + " equality=" + to_string(rep.equality);
        if (rep.equality == classics::EqualityCase::Design) l += " k=" + std::to_string(rep.k);
        r.line(l);
        r.doc = {{"m", rep.m}, {"n", rep.n}, {"bound_holds", rep.bound_holds}, {"equality", to_string(rep.equality)}};
        if (rep.equality == classics::EqualityCase::Design) r.doc["k"] = rep.k;
        return r;
      };
    });
    auto* fd = leaf(cl, "fundament", "Is {2^(i-1) d_i} a basis of the integers?");
    fd->add_option("--period", period, "Odd digits of one period, e.g. \"1,-1\"")->required();
    fd->callback([&] {
      action = [&] {
        Report r;
        classics::PeriodicOddSeq d;
        for (const auto& tok : detail::split(period, ',')) {
          std::size_t used = 0;
          long v = 0;
          try {
            v = std::stol(tok, &used);
          } catch (const std::exception&) {
            used = 0;
          }
          require(used == tok.size() && used > 0, ErrorCode::InvalidArgument, "'" + tok + "' is not an integer");
          d.push_back(v);
        }
        require(d.size() <= 64, ErrorCode::TooLarge, "period longer than 64");
        for (long x : d) require(std::labs(x) <= 1000000, ErrorCode::TooLarge, "digits are limited to |d| <= 10^6");
        const auto witness = classics::fundament_witness(d);
        r.line(detail::boolean(!witness));
        r.doc = {{"period", d}, {"fundament", !witness}};
        if (witness) {
          r.line("not representable: " + witness->get_str());
          r.doc["witness"] = witness->get_str();
        }
        return r;
      };
    });
    auto* mo = leaf(cl, "moser", "Integers with base-4 digits 0 and 1");
    mo->add_option("--count", count, "How many terms")->required()->check(CLI::Range(std::size_t{0}, std::size_t{1000000}));
    mo->callback([&] {
      action = [&] {
        Report r;
        json terms = json::array();
        for (const auto& v : classics::moser_debruijn(count)) {
          r.line(v.get_str());
          terms.push_back(v.get_str());
        }
        r.doc = {{"count", count}, {"terms", terms}};
        return r;
      };
    });
    auto* hj = leaf(cl, "hajos", "Factorizations of Z_m1 x ... x Z_mt with no periodic factor");
    hj->add_option("--type", type, "Cyclic factor orders, e.g. 2,2,3")->required();
    hj->callback([&] {
      action = [&] {
        Report r;
        std::vector<unsigned> t;
        for (const auto& tok : detail::split(type, ',')) t.push_back(static_cast<unsigned>(detail::spec_number(tok, type)));
        const classics::AbelianGroup grp(t);
        const auto found = classics::hajos_search(grp);
        r.line(std::to_string(found.size()));
        json rows = json::array();
        auto show = [&](const classics::Subset& s) {
          std::string out = "{";
          for (std::size_t i = 0; i < s.size(); ++i) {
            const auto c = grp.coords(s[i]);
            out += (i ? " (" : "(");
            for (std::size_t k = 0; k < c.size(); ++k) out += (k ? "," : "") + std::to_string(c[k]);
            out += ")";
          }
          return out + "}";
        };
        for (const auto& f : found) {
          r.line("A=" + show(f.a) + " B=" + show(f.b));
          rows.push_back({{"a", f.a}, {"b", f.b}});
        }
        r.doc = {{"type", t}, {"order", grp.order()}, {"non_periodic_factorizations", rows}};
        return r;
      };
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: Usage: " << e.what() << '\n';
    return kValidation;
  }

  try {
    Report r = action();
    if (g.format == "structured") {
      json doc = {{"command", app.get_subcommands().front()->get_name() + " " +
                                  app.get_subcommands().front()->get_subcommands().front()->get_name()},
                  {"result", r.doc}};
      out << doc.dump(2) << '\n';
    } else {
      for (const auto& l : r.lines) out << l << '\n';
    }
    return kOk;
  } catch (const IoError& e) {
    err << "error: IO: " << e.what() << '\n';
    return kIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::bad_alloc&) {
    err << "error: TooLarge: out of memory\n";
    return kValidation;
  }
}

}  // namespace exactcomb::cli

#endif  // EXACTCOMB_TOOLS_CLI_HPP
