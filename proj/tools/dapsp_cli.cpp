// Command-line driver: workload generation, differential verification
// against the Floyd-Warshall oracle, benchmarking and stream execution.
// Talks to the engine exclusively through the C API in dapsp.h.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dapsp.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitNegCycle = 3;

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void fail(int code, const std::string& msg) { throw CliError{code, msg}; }

[[noreturn]] void fail_api(int rc, const std::string& what) {
  const int code = (rc == DAPSP_ERR_NEGATIVE_CYCLE || rc == DAPSP_ERR_NEGATIVE_CYCLE_INTRODUCED)
                       ? kExitNegCycle
                       : kExitInput;
  fail(code, what + ": " + dapsp_last_error());
}

struct GraphHandle {
  dapsp_graph* g = nullptr;
  ~GraphHandle() { dapsp_graph_free(g); }
};

struct EngineHandle {
  dapsp_engine* e = nullptr;
  ~EngineHandle() { dapsp_engine_free(e); }
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(kExitInput, "cannot open " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

// ---------------------------------------------------------------------------
// Update-stream records

struct EdgeSpec {
  uint32_t other;
  int64_t w;
};

struct StreamLine {
  enum class Kind { Del, Add, Query, QueryPath } kind;
  uint32_t a = 0, b = 0;
  std::vector<EdgeSpec> in, out;
  std::string raw;
};

std::vector<EdgeSpec> parse_edge_list(const std::string& text, int line_no) {
  std::vector<EdgeSpec> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      fail(kExitInput, "stream line " + std::to_string(line_no) + ": expected u:w, got '" + item + "'");
    try {
      out.push_back({static_cast<uint32_t>(std::stoul(item.substr(0, colon))),
                     static_cast<int64_t>(std::stoll(item.substr(colon + 1)))});
    } catch (const std::exception&) {
      fail(kExitInput, "stream line " + std::to_string(line_no) + ": bad edge '" + item + "'");
    }
  }
  return out;
}

std::vector<StreamLine> parse_stream(const std::string& text) {
  std::vector<StreamLine> out;
  std::istringstream is(text);
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::string op;
    ls >> op;
    StreamLine rec;
    rec.raw = line;
    if (op == "del") {
      rec.kind = StreamLine::Kind::Del;
      if (!(ls >> rec.a)) fail(kExitInput, "stream line " + std::to_string(line_no) + ": del <id>");
    } else if (op == "add") {
      rec.kind = StreamLine::Kind::Add;
      if (!(ls >> rec.a)) fail(kExitInput, "stream line " + std::to_string(line_no) + ": add <id>");
      // Rest: " | in u:w,... | out v:w,..."
      std::string rest;
      std::getline(ls, rest);
      std::vector<std::string> parts;
      std::stringstream ps(rest);
      std::string part;
      while (std::getline(ps, part, '|')) parts.push_back(part);
      if (parts.size() != 3)
        fail(kExitInput, "stream line " + std::to_string(line_no) + ": add needs '| in ... | out ...'");
      auto strip_tag = [&](std::string s, const std::string& tag) {
        std::istringstream ts(s);
        std::string t;
        ts >> t;
        if (t != tag)
          fail(kExitInput, "stream line " + std::to_string(line_no) + ": expected '" + tag + "'");
        std::string rest2;
        ts >> rest2;
        return rest2;
      };
      rec.in = parse_edge_list(strip_tag(parts[1], "in"), line_no);
      rec.out = parse_edge_list(strip_tag(parts[2], "out"), line_no);
    } else if (op == "q" || op == "qp") {
      rec.kind = op == "q" ? StreamLine::Kind::Query : StreamLine::Kind::QueryPath;
      if (!(ls >> rec.a >> rec.b))
        fail(kExitInput, "stream line " + std::to_string(line_no) + ": " + op + " <s> <t>");
    } else {
      fail(kExitInput, "stream line " + std::to_string(line_no) + ": unknown op '" + op + "'");
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::string format_add(uint32_t id, const std::vector<EdgeSpec>& in,
                       const std::vector<EdgeSpec>& out) {
  std::ostringstream os;
  os << "add " << id << " | in ";
  for (std::size_t i = 0; i < in.size(); ++i)
    os << (i ? "," : "") << in[i].other << ':' << in[i].w;
  os << " | out ";
  for (std::size_t i = 0; i < out.size(); ++i)
    os << (i ? "," : "") << out[i].other << ':' << out[i].w;
  return os.str();
}

int apply_to_engine(dapsp_engine* e, const StreamLine& rec) {
  if (rec.kind == StreamLine::Kind::Del) return dapsp_engine_delete_node(e, rec.a);
  std::vector<uint32_t> is, os;
  std::vector<int64_t> iw, ow;
  for (const EdgeSpec& x : rec.in) is.push_back(x.other), iw.push_back(x.w);
  for (const EdgeSpec& x : rec.out) os.push_back(x.other), ow.push_back(x.w);
  return dapsp_engine_insert_node(e, rec.a, is.data(), iw.data(), is.size(), os.data(), ow.data(),
                                  os.size());
}

int apply_to_graph(dapsp_graph* g, const StreamLine& rec) {
  if (rec.kind == StreamLine::Kind::Del) return dapsp_graph_delete_node(g, rec.a);
  std::vector<uint32_t> is, os;
  std::vector<int64_t> iw, ow;
  for (const EdgeSpec& x : rec.in) is.push_back(x.other), iw.push_back(x.w);
  for (const EdgeSpec& x : rec.out) os.push_back(x.other), ow.push_back(x.w);
  return dapsp_graph_insert_node(g, rec.a, is.data(), iw.data(), is.size(), os.data(), ow.data(),
                                 os.size());
}

// ---------------------------------------------------------------------------
// Shared flags

struct CommonOpts {
  std::string variant = "rand-weighted";
  double c = 3.0;
  uint64_t seed = 0;
  uint32_t delta = 0;
  std::string graph_path;
  std::string stream_path;
  std::string adversary = "none";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool need_graph) {
  cmd->add_option("--variant", o.variant)
      ->check(CLI::IsMember({"rand-weighted", "unweighted", "deterministic"}));
  cmd->add_option("--c", o.c)->check(CLI::Range(1.0, 64.0));
  cmd->add_option("--seed", o.seed);
  cmd->add_option("--delta", o.delta);
  auto* g = cmd->add_option("--graph", o.graph_path);
  if (need_graph) g->required();
  cmd->add_option("--stream", o.stream_path);
  cmd->add_option("--adversary", o.adversary)->check(CLI::IsMember({"none", "path", "center"}));
}

dapsp_engine_config engine_config(const CommonOpts& o) {
  dapsp_engine_config cfg{};
  cfg.variant = o.variant == "unweighted"     ? DAPSP_VARIANT_UNWEIGHTED
                : o.variant == "deterministic" ? DAPSP_VARIANT_DETERMINISTIC
                                               : DAPSP_VARIANT_RAND_WEIGHTED;
  cfg.confidence = o.c;
  cfg.seed = o.seed;
  cfg.delta_override = o.delta;
  return cfg;
}

GraphHandle load_graph_file(const std::string& path) {
  GraphHandle h;
  const int rc = dapsp_graph_parse(read_file(path).c_str(), &h.g);
  if (rc != DAPSP_OK) fail_api(rc, "graph " + path);
  return h;
}

// ---------------------------------------------------------------------------
// gen

struct GenOpts {
  uint32_t n = 32;
  double degree = 4.0;
  int64_t wmin = 1, wmax = 100;
  uint32_t updates = 0;
  std::string mix = "0.2,0.3,0.5";  // insert,delete,query
  std::string graph_out;
  std::string stream_out;
};

std::string gen_graph_text(const GenOpts& g, std::mt19937_64& rng) {
  std::set<std::pair<uint32_t, uint32_t>> used;
  const auto target = static_cast<std::size_t>(g.degree * g.n);
  std::uniform_int_distribution<uint32_t> node(0, g.n - 1);
  std::uniform_int_distribution<int64_t> weight(g.wmin, g.wmax);
  std::ostringstream body;
  std::size_t m = 0;
  for (std::size_t tries = 0; m < target && tries < target * 20; ++tries) {
    const uint32_t u = node(rng), v = node(rng);
    if (u == v || used.count({u, v})) continue;
    used.insert({u, v});
    body << u << ' ' << v << ' ' << weight(rng) << '\n';
    ++m;
  }
  std::ostringstream os;
  os << g.n << ' ' << m << '\n' << body.str();
  return os.str();
}

int cmd_gen(const GenOpts& g, const CommonOpts& o) {
  if (g.n == 0) fail(kExitInput, "gen: n must be positive");
  double pi, pd, pq;
  if (std::sscanf(g.mix.c_str(), "%lf,%lf,%lf", &pi, &pd, &pq) != 3 || pi < 0 || pd < 0 ||
      pq < 0 || pi + pd + pq <= 0)
    fail(kExitInput, "gen: --mix expects three non-negative ratios i,d,q");

  std::mt19937_64 rng(o.seed);
  std::string graph_text;
  GraphHandle mirror;
  // Negative weights: keep drawing until the oracle clears the graph.
  for (int attempt = 0;; ++attempt) {
    graph_text = gen_graph_text(g, rng);
    dapsp_graph_free(mirror.g);
    mirror.g = nullptr;
    int rc = dapsp_graph_parse(graph_text.c_str(), &mirror.g);
    if (rc != DAPSP_OK) fail_api(rc, "generated graph");
    const uint32_t cap = dapsp_graph_capacity(mirror.g);
    std::vector<int64_t> dist(static_cast<std::size_t>(cap) * cap);
    rc = dapsp_oracle_apsp(mirror.g, dist.data());
    if (rc == DAPSP_OK) break;
    if (rc != DAPSP_ERR_NEGATIVE_CYCLE) fail_api(rc, "generated graph");
    if (attempt >= 200) fail(kExitNegCycle, "gen: could not sample a negative-cycle-free graph");
  }

  // Update stream against a live mirror so records stay valid.
  std::ostringstream stream;
  stream << "# generated workload: n=" << g.n << " updates=" << g.updates << " seed=" << o.seed
         << '\n';
  std::vector<uint32_t> alive(g.n);
  for (uint32_t v = 0; v < g.n; ++v) alive[v] = v;
  uint32_t next_id = g.n;
  std::uniform_real_distribution<double> coin(0.0, pi + pd + pq);
  std::uniform_int_distribution<int64_t> weight(g.wmin, g.wmax);

  for (uint32_t u = 0; u < g.updates; ++u) {
    double draw = coin(rng);
    if (alive.size() <= 2 && draw < pi + pd) draw = 0;  // keep the graph non-trivial
    if (draw < pi || (draw < pi + pd && alive.empty())) {
      // insert a fresh node with a handful of edges to alive nodes
      std::uniform_int_distribution<std::size_t> pick(0, alive.size() - 1);
      const uint32_t id = next_id++;
      for (int tries = 0;; ++tries) {
        std::vector<EdgeSpec> ins, outs;
        const int din = 1 + static_cast<int>(rng() % 3), dout = 1 + static_cast<int>(rng() % 3);
        std::set<uint32_t> seen;
        for (int k = 0; k < din; ++k) {
          const uint32_t s = alive[pick(rng)];
          if (seen.insert(s).second) ins.push_back({s, weight(rng)});
        }
        seen.clear();
        for (int k = 0; k < dout; ++k) {
          const uint32_t t = alive[pick(rng)];
          if (seen.insert(t).second) outs.push_back({t, weight(rng)});
        }
        StreamLine rec;
        rec.kind = StreamLine::Kind::Add;
        rec.a = id;
        rec.in = ins;
        rec.out = outs;
        int rc = apply_to_graph(mirror.g, rec);
        if (rc != DAPSP_OK) fail_api(rc, "gen insert");
        if (g.wmin < 0) {
          const uint32_t cap = dapsp_graph_capacity(mirror.g);
          std::vector<int64_t> dist(static_cast<std::size_t>(cap) * cap);
          rc = dapsp_oracle_apsp(mirror.g, dist.data());
          if (rc == DAPSP_ERR_NEGATIVE_CYCLE) {
            // burn the id and retry with fresh weights on the next one
            if (dapsp_graph_delete_node(mirror.g, id) != DAPSP_OK)
              fail_api(rc, "gen rollback");
            if (tries >= 50) fail(kExitNegCycle, "gen: insert sampling kept closing cycles");
            continue;
          }
          if (rc != DAPSP_OK) fail_api(rc, "gen oracle");
        }
        stream << format_add(id, ins, outs) << '\n';
        alive.push_back(id);
        break;
      }
    } else if (draw < pi + pd) {
      std::uniform_int_distribution<std::size_t> pick(0, alive.size() - 1);
      const std::size_t k = pick(rng);
      const uint32_t v = alive[k];
      if (dapsp_graph_delete_node(mirror.g, v) != DAPSP_OK) fail(kExitInput, "gen delete");
      alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(k));
      stream << "del " << v << '\n';
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, alive.size() - 1);
      stream << (rng() % 4 == 0 ? "qp " : "q ") << alive[pick(rng)] << ' ' << alive[pick(rng)]
             << '\n';
    }
  }

  auto write_out = [](const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(kExitInput, "cannot write " + path);
    f << text;
  };
  write_out(g.graph_out, graph_text);
  write_out(g.stream_out, stream.str());
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct AdversaryState {
  std::mt19937_64 rng;
  std::vector<uint32_t> alive;

  explicit AdversaryState(uint64_t seed, const dapsp_graph* g) : rng(seed ^ 0x9e3779b9ull) {
    for (uint32_t v = 0; v < dapsp_graph_capacity(g); ++v)
      if (dapsp_graph_node_alive(g, v)) alive.push_back(v);
  }
  void on_delete(uint32_t v) {
    alive.erase(std::remove(alive.begin(), alive.end(), v), alive.end());
  }
};

std::optional<std::vector<uint32_t>> query_engine_path(dapsp_engine* e, uint32_t s, uint32_t t) {
  const uint32_t cap = dapsp_engine_capacity(e);
  std::vector<uint32_t> buf(cap + 1);
  std::size_t len = 0;
  const int rc = dapsp_engine_query_path(e, s, t, buf.data(), buf.size(), &len);
  if (rc != DAPSP_OK) return std::nullopt;
  buf.resize(len);
  return buf;
}

// PathAttacker: look at the path the engine leaks for one random reachable
// pair and delete a random interior node of it. CenterHunter: tally interior
// frequencies over many returned paths and delete the most loaded node.
std::optional<uint32_t> adversary_pick(const std::string& kind, AdversaryState& st,
                                       dapsp_engine* e) {
  if (st.alive.size() <= 2) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, st.alive.size() - 1);
  auto random_alive = [&] { return st.alive[pick(st.rng)]; };
  if (kind == "path") {
    for (int tries = 0; tries < 64; ++tries) {
      const uint32_t s = random_alive(), t = random_alive();
      if (s == t) continue;
      auto path = query_engine_path(e, s, t);
      if (!path || path->size() < 3) continue;
      std::uniform_int_distribution<std::size_t> mid(1, path->size() - 2);
      return (*path)[mid(st.rng)];
    }
    return random_alive();
  }
  // center: sample a batch of pairs, count interior appearances
  std::map<uint32_t, std::size_t> tally;
  const std::size_t batch = 4 * st.alive.size();
  for (std::size_t k = 0; k < batch; ++k) {
    const uint32_t s = random_alive(), t = random_alive();
    if (s == t) continue;
    auto path = query_engine_path(e, s, t);
    if (!path) continue;
    for (std::size_t i = 1; i + 1 < path->size(); ++i) ++tally[(*path)[i]];
  }
  uint32_t best = 0;
  std::size_t best_count = 0;
  for (const auto& [v, cnt] : tally)
    if (cnt > best_count) best = v, best_count = cnt;
  if (best_count == 0) return random_alive();
  return best;
}

struct VerifyOpts {
  uint32_t updates = 0;  // adversary-generated updates when no stream given
  std::string trace_out;
  bool quiet = false;
};

int check_all_pairs(dapsp_graph* mirror, dapsp_engine* engine, std::size_t update_idx) {
  const uint32_t cap = dapsp_graph_capacity(mirror);
  if (cap != dapsp_engine_capacity(engine)) {
    std::cerr << "mismatch at update " << update_idx << ": capacity diverged\n";
    return kExitMismatch;
  }
  const std::size_t cells = static_cast<std::size_t>(cap) * cap;
  std::vector<int64_t> want(cells), got(cells);
  int rc = dapsp_oracle_apsp(mirror, want.data());
  if (rc != DAPSP_OK) fail_api(rc, "oracle");
  rc = dapsp_engine_distances(engine, got.data());
  if (rc != DAPSP_OK) fail_api(rc, "engine distances");
  for (uint32_t s = 0; s < cap; ++s) {
    if (!dapsp_graph_node_alive(mirror, s)) continue;
    for (uint32_t t = 0; t < cap; ++t) {
      if (!dapsp_graph_node_alive(mirror, t)) continue;
      const std::size_t p = static_cast<std::size_t>(s) * cap + t;
      if (want[p] != got[p]) {
        std::cerr << "mismatch at update " << update_idx << ": (" << s << "," << t
                  << ") expected " << want[p] << " got " << got[p] << '\n';
        return kExitMismatch;
      }
      // Spot-check path realizability for finite entries.
      if (want[p] < dapsp_infinity() && ((s + t + update_idx) % 97) == 0) {
        auto path = query_engine_path(engine, s, t);
        if (!path || path->empty() || path->front() != s || path->back() != t) {
          std::cerr << "mismatch at update " << update_idx << ": no path for (" << s << "," << t
                    << ")\n";
          return kExitMismatch;
        }
      }
    }
  }
  return kExitOk;
}

int cmd_verify(const CommonOpts& o, const VerifyOpts& vo) {
  GraphHandle mirror = load_graph_file(o.graph_path);
  EngineHandle engine;
  dapsp_engine_config cfg = engine_config(o);
  int rc = dapsp_engine_create(mirror.g, &cfg, &engine.e);
  if (rc != DAPSP_OK) fail_api(rc, "engine");

  std::ofstream trace;
  if (!vo.trace_out.empty()) {
    trace.open(vo.trace_out, std::ios::binary);
    if (!trace) fail(kExitInput, "cannot write " + vo.trace_out);
  }

  std::vector<StreamLine> stream;
  if (!o.stream_path.empty()) stream = parse_stream(read_file(o.stream_path));

  AdversaryState adv(o.seed, mirror.g);
  std::size_t update_idx = 0;
  if ((rc = check_all_pairs(mirror.g, engine.e, update_idx)) != kExitOk) return rc;

  auto run_update = [&](const StreamLine& rec) -> int {
    rc = apply_to_engine(engine.e, rec);
    if (rc != DAPSP_OK) fail_api(rc, "update " + std::to_string(update_idx + 1));
    rc = apply_to_graph(mirror.g, rec);
    if (rc != DAPSP_OK) fail_api(rc, "mirror update");
    if (rec.kind == StreamLine::Kind::Del) adv.on_delete(rec.a);
    if (trace.is_open()) trace << rec.raw << '\n';
    ++update_idx;
    return check_all_pairs(mirror.g, engine.e, update_idx);
  };

  for (const StreamLine& rec : stream) {
    if (rec.kind == StreamLine::Kind::Query || rec.kind == StreamLine::Kind::QueryPath) {
      if (trace.is_open()) trace << rec.raw << '\n';
      continue;  // answers are already covered by the all-pairs check
    }
    if ((rc = run_update(rec)) != kExitOk) return rc;
  }
  if (o.adversary != "none") {
    for (uint32_t k = 0; k < vo.updates; ++k) {
      auto target = adversary_pick(o.adversary, adv, engine.e);
      if (!target) break;
      StreamLine rec;
      rec.kind = StreamLine::Kind::Del;
      rec.a = *target;
      rec.raw = "del " + std::to_string(*target);
      if ((rc = run_update(rec)) != kExitOk) return rc;
    }
  }
  if (!vo.quiet)
    std::cout << "verified " << update_idx << " updates, all alive-pair distances match\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bench

int cmd_bench(const CommonOpts& o) {
  GraphHandle g = load_graph_file(o.graph_path);
  EngineHandle engine;
  dapsp_engine_config cfg = engine_config(o);
  int rc = dapsp_engine_create(g.g, &cfg, &engine.e);
  if (rc != DAPSP_OK) fail_api(rc, "engine");
  std::vector<StreamLine> stream;
  if (!o.stream_path.empty()) stream = parse_stream(read_file(o.stream_path));

  std::cout << "update_idx,wall_ns,relaxations,sketch_edges,affected_nodes,max_congestion,"
               "centers_total,swapped\n";
  std::size_t idx = 0;
  for (const StreamLine& rec : stream) {
    if (rec.kind == StreamLine::Kind::Query || rec.kind == StreamLine::Kind::QueryPath) {
      int64_t d;
      dapsp_engine_query_dist(engine.e, rec.a, rec.b, &d);
      continue;
    }
    rc = apply_to_engine(engine.e, rec);
    if (rc != DAPSP_OK) fail_api(rc, "update " + std::to_string(idx + 1));
    dapsp_update_stats st{};
    dapsp_engine_last_stats(engine.e, &st);
    std::cout << ++idx << ',' << st.wall_ns << ',' << st.relaxations << ',' << st.sketch_edges
              << ',' << st.affected_nodes << ',' << st.max_congestion << ',' << st.centers_total
              << ',' << st.swapped << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// run

int cmd_run(const CommonOpts& o) {
  GraphHandle g = load_graph_file(o.graph_path);
  EngineHandle engine;
  dapsp_engine_config cfg = engine_config(o);
  int rc = dapsp_engine_create(g.g, &cfg, &engine.e);
  if (rc != DAPSP_OK) fail_api(rc, "engine");
  std::vector<StreamLine> stream;
  if (!o.stream_path.empty()) stream = parse_stream(read_file(o.stream_path));

  std::size_t idx = 0;
  for (const StreamLine& rec : stream) {
    switch (rec.kind) {
      case StreamLine::Kind::Query: {
        int64_t d;
        rc = dapsp_engine_query_dist(engine.e, rec.a, rec.b, &d);
        if (rc != DAPSP_OK) fail_api(rc, "query");
        std::cout << rec.a << ' ' << rec.b << ' ';
        if (d >= dapsp_infinity())
          std::cout << "inf\n";
        else
          std::cout << d << '\n';
        break;
      }
      case StreamLine::Kind::QueryPath: {
        auto path = query_engine_path(engine.e, rec.a, rec.b);
        if (!path) {
          std::cout << "unreachable\n";
        } else {
          for (std::size_t i = 0; i < path->size(); ++i)
            std::cout << (i ? " " : "") << (*path)[i];
          std::cout << '\n';
        }
        break;
      }
      default:
        rc = apply_to_engine(engine.e, rec);
        if (rc != DAPSP_OK) fail_api(rc, "update " + std::to_string(idx + 1));
        ++idx;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dapsp: fully dynamic all-pairs shortest paths"};
  app.require_subcommand(1);

  CommonOpts gen_common, verify_common, bench_common, run_common;
  GenOpts gen_opts;
  VerifyOpts verify_opts;

  auto* gen = app.add_subcommand("gen", "generate a graph and update stream");
  add_common(gen, gen_common, false);
  gen->add_option("--n", gen_opts.n)->required();
  gen->add_option("--degree", gen_opts.degree);
  gen->add_option("--wmin", gen_opts.wmin);
  gen->add_option("--wmax", gen_opts.wmax);
  gen->add_option("--updates", gen_opts.updates);
  gen->add_option("--mix", gen_opts.mix);
  gen->add_option("--graph-out", gen_opts.graph_out);
  gen->add_option("--stream-out", gen_opts.stream_out);

  auto* verify = app.add_subcommand("verify", "replay a stream, diff the oracle every update");
  add_common(verify, verify_common, true);
  verify->add_option("--updates", verify_opts.updates);
  verify->add_option("--trace", verify_opts.trace_out);
  verify->add_flag("--quiet", verify_opts.quiet);

  auto* bench = app.add_subcommand("bench", "replay a stream, print per-update counters as CSV");
  add_common(bench, bench_common, true);
  bench->add_flag("--csv");  // accepted for interface stability; bench always emits CSV

  auto* run = app.add_subcommand("run", "execute a stream and answer inline queries");
  add_common(run, run_common, true);

  CLI11_PARSE(app, argc, argv);
  try {
    if (gen->parsed()) return cmd_gen(gen_opts, gen_common);
    if (verify->parsed()) return cmd_verify(verify_common, verify_opts);
    if (bench->parsed()) return cmd_bench(bench_common);
    if (run->parsed()) return cmd_run(run_common);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
