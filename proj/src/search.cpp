#include "disting/search.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "disting/automorphisms.hpp"
#include "disting/errors.hpp"
#include "disting/permutation.hpp"

namespace disting {

int parameter_result::value() const {
  if (!exact())
    throw internal_error("parameter value requested from an interval result");
  return lo;
}

std::string to_string(parameter p) {
  switch (p) {
    case parameter::chi_prime: return "chi-prime";
    case parameter::chi: return "chi";
    case parameter::d: return "d";
    case parameter::d_prime: return "d-prime";
    case parameter::chi_d: return "chi-d";
    case parameter::chi_prime_d: return "chi-prime-d";
  }
  return "chi";
}

parameter parse_parameter(const std::string& name) {
  for (parameter p : {parameter::chi_prime, parameter::chi, parameter::d,
                      parameter::d_prime, parameter::chi_d, parameter::chi_prime_d})
    if (to_string(p) == name) return p;
  throw parse_error("unknown parameter '" + name + "'");
}

std::string to_string(method m) {
  switch (m) {
    case method::search: return "search";
    case method::closed_form: return "closed-form";
    case method::construction: return "construction";
    case method::bounds: return "bounds";
  }
  return "search";
}

namespace {

using steady_clock = std::chrono::steady_clock;

struct deadline {
  std::optional<steady_clock::time_point> at;
  mutable std::uint32_t tick = 0;

  // Cheap check for hot loops: consults the clock every 1024th call.
  bool expired() const {
    if (!at) return false;
    if ((++tick & 1023u) != 0) return false;
    return steady_clock::now() >= *at;
  }
  bool hard_expired() const { return at && steady_clock::now() >= *at; }
};

deadline make_deadline(const search_options& opts) {
  if (!opts.budget_secs) return {};
  auto span = std::chrono::duration_cast<steady_clock::duration>(
      std::chrono::duration<double>(*opts.budget_secs));
  return {steady_clock::now() + span, 0};
}

struct budget_expired {};

// Edges ordered by descending endpoint-degree sum (constrained first), ties
// by canonical index.
std::vector<int> edge_search_order(const graph& g) {
  std::vector<int> order(g.edge_count());
  for (int i = 0; i < g.edge_count(); i++) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const edge &ea = g.edges()[a], &eb = g.edges()[b];
    int da = g.degree(ea.u) + g.degree(ea.v);
    int db = g.degree(eb.u) + g.degree(eb.v);
    if (da != db) return da > db;
    return a < b;
  });
  return order;
}

// Vertices in DFS preorder from the lowest-index maximum-degree vertex,
// neighbors visited in ascending order, so the search moves along edges and
// properness constraints bind early.
std::vector<int> vertex_search_order(const graph& g) {
  int n = g.vertex_count();
  int root = 0;
  for (int v = 0; v < n; v++)
    if (g.degree(v) > g.degree(root)) root = v;
  std::vector<int> order;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{root};
  seen[root] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    const auto& nb = g.neighbors(v);
    for (auto it = nb.rbegin(); it != nb.rend(); ++it)
      if (!seen[*it]) {
        seen[*it] = true;
        stack.push_back(*it);
      }
  }
  for (int v = 0; v < n; v++)  // isolated-vertex safety; engines are connected
    if (!seen[v]) order.push_back(v);
  return order;
}

std::vector<std::vector<int>> edge_conflict_lists(const graph& g) {
  std::vector<std::vector<int>> incident(g.vertex_count());
  for (int i = 0; i < g.edge_count(); i++) {
    incident[g.edges()[i].u].push_back(i);
    incident[g.edges()[i].v].push_back(i);
  }
  std::vector<std::vector<int>> conflicts(g.edge_count());
  for (const auto& list : incident)
    for (int a : list)
      for (int b : list)
        if (a != b) conflicts[a].push_back(b);
  return conflicts;
}

std::vector<std::vector<int>> vertex_conflict_lists(const graph& g) {
  std::vector<std::vector<int>> conflicts(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); v++)
    conflicts[v] = g.neighbors(v);
  return conflicts;
}

// Unified backtracking search for one feasibility question: does the graph
// admit a k-labeling of its items (edges or vertices) that is proper and/or
// distinguishing?  The label space is canonicalized by the first-use rule
// (label j may appear only after 1..j-1, in assignment order), sound because
// both properties are invariant under relabeling.
//
// Distinguishing is enforced in one of two ways.  When the automorphism
// group was enumerated ("survivor mode"), the nonidentity item permutations
// are filtered incrementally: assigning a label kills every permutation it
// contradicts, a permutation whose moved items are all assigned and that is
// still alive preserves every completion (prune), and once no permutation is
// alive any proper completion is a witness.  When the group was too large to
// enumerate, the search runs on canonical labelings only and checks each
// complete leaf with the witness search that never enumerates the group.
class labeling_search {
 public:
  labeling_search(const graph& g, bool edge_mode, const probe_request& req,
                  const deadline& dl,
                  const std::vector<vertex_permutation>* group)
      : g_(g), edge_mode_(edge_mode), req_(req), dl_(dl) {
    item_count_ = edge_mode ? g.edge_count() : g.vertex_count();
    order_ = edge_mode ? edge_search_order(g) : vertex_search_order(g);
    conflicts_ = edge_mode ? edge_conflict_lists(g) : vertex_conflict_lists(g);
    label_.assign(item_count_, 0);
    kill_log_.assign(item_count_ + 1, {});

    if (!req.require_distinguishing) {
      fallback_ = false;  // survivor machinery with an empty permutation set
    } else if (group) {
      fallback_ = false;
      load_permutations(*group);
    } else {
      fallback_ = true;
    }
  }

  probe_verdict run(std::vector<int>& out_labels) {
    if (dl_.hard_expired()) return probe_verdict::budget_exhausted;
    if (req_.require_distinguishing && randomized_probe()) {
      out_labels = label_;
      return probe_verdict::satisfiable;
    }
    std::fill(label_.begin(), label_.end(), 0);
    try {
      if (dfs(0, 0)) {
        out_labels = label_;
        return probe_verdict::satisfiable;
      }
      return probe_verdict::unsatisfiable;
    } catch (const budget_expired&) {
      return probe_verdict::budget_exhausted;
    }
  }

 private:
  const graph& g_;
  bool edge_mode_;
  probe_request req_;
  const deadline& dl_;
  int item_count_ = 0;
  std::vector<int> order_;
  std::vector<std::vector<int>> conflicts_;
  std::vector<int> label_;  // by item, 0 = unassigned
  bool fallback_ = false;

  // Survivor state.
  std::vector<std::vector<int>> perm_;      // nonidentity item permutations
  std::vector<std::vector<int>> perm_inv_;
  std::vector<char> alive_;
  long long alive_count_ = 0;
  std::vector<std::vector<int>> movers_of_;    // item -> permutations moving it
  std::vector<int> unassigned_moved_;          // per permutation
  long long complete_alive_ = 0;  // alive permutations with all moved items assigned
  std::vector<std::vector<int>> kill_log_;     // per search depth

  void load_permutations(const std::vector<vertex_permutation>& group) {
    std::vector<std::vector<int>> images;
    for (const auto& phi : group) {
      if (phi.is_identity()) continue;
      if (edge_mode_)
        images.push_back(edge_action(g_, phi).images);
      else
        images.push_back(phi.images);
    }
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    for (auto& img : images) {
      bool identity = true;
      for (int i = 0; i < item_count_ && identity; i++) identity = img[i] == i;
      if (identity) continue;  // only possible off the engines' preconditions
      perm_.push_back(std::move(img));
    }
    int count = static_cast<int>(perm_.size());
    perm_inv_.resize(count);
    movers_of_.assign(item_count_, {});
    unassigned_moved_.assign(count, 0);
    alive_.assign(count, 1);
    alive_count_ = count;
    for (int p = 0; p < count; p++) {
      perm_inv_[p].assign(item_count_, 0);
      for (int i = 0; i < item_count_; i++) perm_inv_[p][perm_[p][i]] = i;
      for (int i = 0; i < item_count_; i++)
        if (perm_[p][i] != i) {
          movers_of_[i].push_back(p);
          unassigned_moved_[p]++;
        }
    }
  }

  bool conflicting(int item, int l) const {
    for (int other : conflicts_[item])
      if (label_[other] == l) return true;
    return false;
  }

  void assign(int item, int l, int depth) {
    label_[item] = l;
    if (fallback_) return;
    auto& log = kill_log_[depth];
    for (int p : movers_of_[item])
      if (--unassigned_moved_[p] == 0 && alive_[p]) complete_alive_++;
    for (int p : movers_of_[item]) {
      if (!alive_[p]) continue;
      int j = perm_[p][item];
      int j2 = perm_inv_[p][item];
      if ((label_[j] != 0 && label_[j] != l) ||
          (label_[j2] != 0 && label_[j2] != l)) {
        alive_[p] = 0;
        alive_count_--;
        if (unassigned_moved_[p] == 0) complete_alive_--;
        log.push_back(p);
      }
    }
  }

  void unassign(int item, int depth) {
    if (!fallback_) {
      auto& log = kill_log_[depth];
      for (auto it = log.rbegin(); it != log.rend(); ++it) {
        alive_[*it] = 1;
        alive_count_++;
        if (unassigned_moved_[*it] == 0) complete_alive_++;
      }
      log.clear();
      for (int p : movers_of_[item]) {
        if (alive_[p] && unassigned_moved_[p] == 0) complete_alive_--;
        unassigned_moved_[p]++;
      }
    }
    label_[item] = 0;
  }

  // Fills positions pos..end with any (canonical) proper assignment; the
  // distinguishing side is already settled when this runs.
  bool complete_rest(int pos, int used_max) {
    if (pos == item_count_) return true;
    if (dl_.expired()) throw budget_expired{};
    if (!req_.require_proper) {
      for (int p = pos; p < item_count_; p++) label_[order_[p]] = 1;
      return true;
    }
    int item = order_[pos];
    int limit = std::min(req_.k, used_max + 1);
    for (int l = 1; l <= limit; l++) {
      if (conflicting(item, l)) continue;
      label_[item] = l;
      if (complete_rest(pos + 1, std::max(used_max, l))) return true;
      label_[item] = 0;
    }
    return false;
  }

  bool leaf_is_distinguishing() {
    if (edge_mode_)
      return !find_preserving_automorphism(g_, edge_labeling{req_.k, label_});
    return !find_preserving_automorphism(g_, vertex_labeling{req_.k, label_});
  }

  bool dfs(int pos, int used_max) {
    if (dl_.expired()) throw budget_expired{};
    if (!fallback_ && alive_count_ == 0) return complete_rest(pos, used_max);
    if (pos == item_count_) return leaf_is_distinguishing();
    int item = order_[pos];
    int limit = std::min(req_.k, used_max + 1);
    for (int l = 1; l <= limit; l++) {
      if (req_.require_proper && conflicting(item, l)) continue;
      assign(item, l, pos);
      if (!fallback_ && complete_alive_ > 0) {
        // Some surviving symmetry already preserves every completion.
        unassign(item, pos);
        continue;
      }
      if (dfs(pos + 1, std::max(used_max, l))) return true;
      unassign(item, pos);
    }
    return false;
  }

  // Deterministic randomized probing: build candidate labelings cheaply and
  // verify each one exactly.  Often finds a witness long before systematic
  // search would, especially when the group is too large to enumerate.
  bool randomized_probe() {
    std::mt19937 rng(0x53ABD5u + 1000003u * static_cast<unsigned>(req_.k) +
                     7919u * static_cast<unsigned>(item_count_));
    const int tries = 96;
    for (int attempt = 0; attempt < tries; attempt++) {
      if (dl_.hard_expired()) return false;
      std::fill(label_.begin(), label_.end(), 0);
      bool built;
      if (req_.require_proper) {
        long long nodes = 0;
        built = random_proper_fill(0, rng, nodes, 64LL * item_count_ + 64);
      } else {
        std::uniform_int_distribution<int> pick(1, req_.k);
        for (int i = 0; i < item_count_; i++) label_[i] = pick(rng);
        built = true;
      }
      if (built && leaf_is_distinguishing()) return true;
    }
    return false;
  }

  bool random_proper_fill(int pos, std::mt19937& rng, long long& nodes,
                          long long cap) {
    if (pos == item_count_) return true;
    if (++nodes > cap) return false;
    int item = order_[pos];
    std::vector<int> labels(req_.k);
    for (int l = 0; l < req_.k; l++) labels[l] = l + 1;
    std::shuffle(labels.begin(), labels.end(), rng);
    for (int l : labels) {
      if (conflicting(item, l)) continue;
      label_[item] = l;
      if (random_proper_fill(pos + 1, rng, nodes, cap)) return true;
      label_[item] = 0;
    }
    return false;
  }
};

void require_connected(const graph& g, const char* what) {
  if (!g.connected())
    throw parameter_error(std::string(what) + " requires a connected graph");
}

void require_edges(const graph& g, int at_least, const char* what) {
  if (g.edge_count() < at_least)
    throw parameter_error(std::string(what) + " requires at least " +
                          std::to_string(at_least) + " edge(s)");
}

std::optional<std::vector<vertex_permutation>> try_enumerate(
    const graph& g, std::size_t limit) {
  try {
    return enumerate_automorphisms(g, limit);
  } catch (const group_too_large_error&) {
    return std::nullopt;
  }
}

labeling_probe probe_core(const graph& g, bool edge_mode,
                          const probe_request& req, const deadline& dl,
                          const std::vector<vertex_permutation>* group) {
  if (req.k < 1) throw parameter_error("probe needs k >= 1");
  labeling_probe out;
  if (edge_mode && req.require_proper) {
    // A proper k-labeling splits the edges into k matchings.
    if (req.k < g.max_degree() ||
        static_cast<long long>(req.k) * (g.vertex_count() / 2) < g.edge_count()) {
      out.verdict = probe_verdict::unsatisfiable;
      return out;
    }
  }
  labeling_search search(g, edge_mode, req, dl, group);
  std::vector<int> labels;
  out.verdict = search.run(labels);
  if (out.verdict == probe_verdict::satisfiable) {
    if (edge_mode)
      out.edge_witness = edge_labeling{req.k, std::move(labels)};
    else
      out.vertex_witness = vertex_labeling{req.k, std::move(labels)};
  }
  return out;
}

// Certified SAT result helper: re-verifies the witness independently.
labeling_certificate certify(const graph& g, const labeling_probe& probe,
                             const probe_request& req) {
  labeling_certificate cert = probe.edge_witness
                                  ? verify_labeling(g, *probe.edge_witness)
                                  : verify_labeling(g, *probe.vertex_witness);
  if (req.require_proper && !cert.proper)
    throw internal_error("search produced an improper witness");
  if (req.require_distinguishing && !cert.distinguishing)
    throw internal_error("search produced a non-distinguishing witness");
  return cert;
}

// Class-one criteria: bipartite graphs, and graphs in which no two vertices
// of maximum degree are adjacent, have chromatic index equal to the maximum
// degree.
bool class_one_by_criterion(const graph& g) {
  if (g.is_bipartite()) return true;
  int dmax = g.max_degree();
  for (const edge& e : g.edges())
    if (g.degree(e.u) == dmax && g.degree(e.v) == dmax) return false;
  return true;
}

parameter_result make_result(parameter p, int lo, int hi, method how,
                             std::optional<labeling_certificate> cert = {}) {
  parameter_result r;
  r.param = p;
  r.lo = lo;
  r.hi = hi;
  r.how = how;
  r.certificate = std::move(cert);
  return r;
}

parameter_result chi_prime_impl(const graph& g, const search_options& opts,
                                const deadline& dl) {
  require_connected(g, "chromatic index");
  require_edges(g, 1, "chromatic index");
  int delta = g.max_degree();
  bool known_class_one = opts.use_shortcuts && class_one_by_criterion(g);

  probe_request at_delta{delta, true, false};
  auto probe = probe_core(g, true, at_delta, dl, nullptr);
  if (probe.verdict == probe_verdict::satisfiable)
    return make_result(parameter::chi_prime, delta, delta, method::search,
                       certify(g, probe, at_delta));
  if (probe.verdict == probe_verdict::unsatisfiable) {
    if (known_class_one)
      throw internal_error("class-one criterion contradicted by search");
    probe_request above{delta + 1, true, false};
    auto probe2 = probe_core(g, true, above, dl, nullptr);
    if (probe2.verdict == probe_verdict::satisfiable)
      return make_result(parameter::chi_prime, delta + 1, delta + 1,
                         method::search, certify(g, probe2, above));
    if (probe2.verdict == probe_verdict::unsatisfiable)
      throw internal_error("no proper edge labeling with max degree + 1 labels");
    // Exact by the classical upper bound, but the budget ran out before a
    // witness was found.
    return make_result(parameter::chi_prime, delta + 1, delta + 1, method::bounds);
  }
  if (known_class_one)
    return make_result(parameter::chi_prime, delta, delta, method::closed_form);
  return make_result(parameter::chi_prime, delta, delta + 1, method::bounds);
}

int greedy_clique_lower_bound(const graph& g) {
  int best = g.vertex_count() > 0 ? 1 : 0;
  for (int start = 0; start < g.vertex_count(); start++) {
    std::vector<int> clique{start};
    for (int u = 0; u < g.vertex_count(); u++) {
      if (u == start) continue;
      bool joins = true;
      for (int w : clique)
        if (!g.adjacent(u, w)) { joins = false; break; }
      if (joins) clique.push_back(u);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

parameter_result chi_impl(const graph& g, const search_options& opts,
                          const deadline& dl) {
  (void)opts;
  require_connected(g, "chromatic number");
  int n = g.vertex_count();
  int lower = greedy_clique_lower_bound(g);
  for (int k = lower; k <= n; k++) {
    if (dl.hard_expired())
      return make_result(parameter::chi, k, n, method::bounds);
    probe_request req{k, true, false};
    auto probe = probe_core(g, false, req, dl, nullptr);
    if (probe.verdict == probe_verdict::satisfiable)
      return make_result(parameter::chi, k, k, method::search,
                         certify(g, probe, req));
    if (probe.verdict == probe_verdict::budget_exhausted)
      return make_result(parameter::chi, k, n, method::bounds);
  }
  throw internal_error("no proper vertex labeling with n labels");
}

parameter_result d_impl(const graph& g, const search_options& opts,
                        const deadline& dl,
                        const std::optional<std::vector<vertex_permutation>>& group) {
  (void)opts;
  require_connected(g, "distinguishing number");
  int n = g.vertex_count();
  for (int k = 1; k <= n; k++) {
    if (dl.hard_expired())
      return make_result(parameter::d, k, n, method::bounds);
    probe_request req{k, false, true};
    auto probe = probe_core(g, false, req, dl, group ? &*group : nullptr);
    if (probe.verdict == probe_verdict::satisfiable)
      return make_result(parameter::d, k, k, method::search,
                         certify(g, probe, req));
    if (probe.verdict == probe_verdict::budget_exhausted)
      return make_result(parameter::d, k, n, method::bounds);
  }
  throw internal_error("all-distinct vertex labels must be distinguishing");
}

parameter_result d_prime_impl(const graph& g, const search_options& opts,
                              const deadline& dl,
                              const std::optional<std::vector<vertex_permutation>>& group) {
  (void)opts;
  require_connected(g, "distinguishing index");
  require_edges(g, 2, "distinguishing index");  // undefined on a single edge
  int m = g.edge_count();
  int cap = std::min(m, g.max_degree() + 1);  // worst case over connected graphs
  for (int k = 1; k <= m; k++) {
    if (dl.hard_expired())
      return make_result(parameter::d_prime, k, std::max(k, cap), method::bounds);
    probe_request req{k, false, true};
    auto probe = probe_core(g, true, req, dl, group ? &*group : nullptr);
    if (probe.verdict == probe_verdict::satisfiable)
      return make_result(parameter::d_prime, k, k, method::search,
                         certify(g, probe, req));
    if (probe.verdict == probe_verdict::budget_exhausted)
      return make_result(parameter::d_prime, k, std::max(k, cap), method::bounds);
  }
  throw internal_error("all-distinct edge labels must be distinguishing");
}

parameter_result chi_d_impl(const graph& g, const search_options& opts,
                            const deadline& dl) {
  require_connected(g, "distinguishing chromatic number");
  int n = g.vertex_count();
  auto chi = chi_impl(g, opts, dl);
  int lower = chi.lo;
  auto group = try_enumerate(g, opts.aut_limit);
  if (group && !dl.hard_expired()) {
    // With the group in hand the distinguishing number is cheap and its
    // lower bound transfers.  Without it we skip this refinement: the
    // leaf-checked searches below stay sound either way.
    auto d = d_impl(g, opts, dl, group);
    lower = std::max(lower, d.lo);
  }
  for (int k = std::max(lower, 1); k <= n; k++) {
    if (dl.hard_expired())
      return make_result(parameter::chi_d, k, n, method::bounds);
    probe_request req{k, true, true};
    auto probe = probe_core(g, false, req, dl, group ? &*group : nullptr);
    if (probe.verdict == probe_verdict::satisfiable)
      return make_result(parameter::chi_d, k, k, method::search,
                         certify(g, probe, req));
    if (probe.verdict == probe_verdict::budget_exhausted)
      return make_result(parameter::chi_d, k, n, method::bounds);
  }
  throw internal_error("bijective vertex labeling must be proper and distinguishing");
}

parameter_result chi_prime_d_impl(const graph& g, const search_options& opts,
                                  const deadline& dl) {
  require_connected(g, "distinguishing chromatic index");
  require_edges(g, 2, "distinguishing chromatic index");
  int delta = g.max_degree();

  // Fixed-vertex rule: when some vertex is fixed by every automorphism, any
  // proper edge labeling is distinguishing (the fixed vertex's distinctly
  // labeled edges pin its neighbors, and the argument propagates along the
  // connected graph), so this parameter equals the chromatic index.
  if (opts.use_shortcuts && refinement_singleton_vertex(g) >= 0) {
    auto chi_prime = chi_prime_impl(g, opts, dl);
    if (chi_prime.exact() && chi_prime.certificate) {
      labeling_certificate cert = verify_labeling(
          g, std::get<edge_labeling>(chi_prime.certificate->labels));
      if (!cert.proper || !cert.distinguishing)
        throw internal_error("fixed-vertex rule contradicted by verification");
      return make_result(parameter::chi_prime_d, chi_prime.lo, chi_prime.lo,
                         method::closed_form, std::move(cert));
    }
    return make_result(parameter::chi_prime_d, chi_prime.lo, chi_prime.hi,
                       method::bounds);
  }

  auto chi_prime = chi_prime_impl(g, opts, dl);
  int lower = chi_prime.lo;
  int cap = delta + 2;  // classical worst case for connected graphs
  auto group = try_enumerate(g, opts.aut_limit);
  if (group && !dl.hard_expired()) {
    auto d_prime = d_prime_impl(g, opts, dl, group);
    lower = std::max(lower, d_prime.lo);
  }
  for (int k = std::max(lower, 1); k <= cap; k++) {
    if (dl.hard_expired())
      return make_result(parameter::chi_prime_d, k, cap, method::bounds);
    probe_request req{k, true, true};
    auto probe = probe_core(g, true, req, dl, group ? &*group : nullptr);
    if (probe.verdict == probe_verdict::satisfiable)
      return make_result(parameter::chi_prime_d, k, k, method::search,
                         certify(g, probe, req));
    if (probe.verdict == probe_verdict::budget_exhausted)
      return make_result(parameter::chi_prime_d, k, cap, method::bounds);
  }
  throw internal_error(
      "no proper distinguishing edge labeling within max degree + 2");
}

}  // namespace

labeling_probe probe_edge_labeling(const graph& g, const probe_request& req,
                                   const search_options& opts) {
  require_connected(g, "edge probe");
  require_edges(g, req.require_distinguishing ? 2 : 1, "edge probe");
  deadline dl = make_deadline(opts);
  std::optional<std::vector<vertex_permutation>> group;
  if (req.require_distinguishing) group = try_enumerate(g, opts.aut_limit);
  return probe_core(g, true, req, dl, group ? &*group : nullptr);
}

labeling_probe probe_vertex_labeling(const graph& g, const probe_request& req,
                                     const search_options& opts) {
  require_connected(g, "vertex probe");
  deadline dl = make_deadline(opts);
  std::optional<std::vector<vertex_permutation>> group;
  if (req.require_distinguishing) group = try_enumerate(g, opts.aut_limit);
  return probe_core(g, false, req, dl, group ? &*group : nullptr);
}

parameter_result compute_chromatic_index(const graph& g,
                                         const search_options& opts) {
  deadline dl = make_deadline(opts);
  return chi_prime_impl(g, opts, dl);
}

parameter_result compute_chromatic_number(const graph& g,
                                          const search_options& opts) {
  deadline dl = make_deadline(opts);
  return chi_impl(g, opts, dl);
}

parameter_result compute_distinguishing_number(const graph& g,
                                               const search_options& opts) {
  deadline dl = make_deadline(opts);
  require_connected(g, "distinguishing number");
  return d_impl(g, opts, dl, try_enumerate(g, opts.aut_limit));
}

parameter_result compute_distinguishing_index(const graph& g,
                                              const search_options& opts) {
  deadline dl = make_deadline(opts);
  require_connected(g, "distinguishing index");
  require_edges(g, 2, "distinguishing index");
  return d_prime_impl(g, opts, dl, try_enumerate(g, opts.aut_limit));
}

parameter_result compute_chromatic_distinguishing_number(
    const graph& g, const search_options& opts) {
  deadline dl = make_deadline(opts);
  return chi_d_impl(g, opts, dl);
}

parameter_result compute_chromatic_distinguishing_index(
    const graph& g, const search_options& opts) {
  deadline dl = make_deadline(opts);
  return chi_prime_d_impl(g, opts, dl);
}

parameter_result compute_parameter(const graph& g, parameter p,
                                   const search_options& opts) {
  switch (p) {
    case parameter::chi_prime: return compute_chromatic_index(g, opts);
    case parameter::chi: return compute_chromatic_number(g, opts);
    case parameter::d: return compute_distinguishing_number(g, opts);
    case parameter::d_prime: return compute_distinguishing_index(g, opts);
    case parameter::chi_d: return compute_chromatic_distinguishing_number(g, opts);
    case parameter::chi_prime_d:
      return compute_chromatic_distinguishing_index(g, opts);
  }
  throw internal_error("unhandled parameter");
}

}  // namespace disting
