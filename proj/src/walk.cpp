#include "gpdrift/walk.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "gpdrift/error.hpp"

namespace gpdrift {

namespace {

void require_nontrivial(const Word& w, const Graph& graph, const VertexGroupSpec& groups) {
    if (w.empty() || piling_of_word(w, graph, groups).empty())
        fail(ErrorKind::invalid_argument, "nu word represents the identity");
}

}  // namespace

FixedWordSampler::FixedWordSampler(Word w, const Graph& graph, const VertexGroupSpec& groups)
    : word_(std::move(w)) {
    require_nontrivial(word_, graph, groups);
}

WordListSampler::WordListSampler(std::vector<Word> words, const Graph& graph, const VertexGroupSpec& groups)
    : words_(std::move(words)) {
    if (words_.empty()) fail(ErrorKind::invalid_argument, "nu word list is empty");
    for (const Word& w : words_) require_nontrivial(w, graph, groups);
}

Word WordListSampler::sample(Rng& rng) const {
    std::uniform_int_distribution<std::size_t> pick(0, words_.size() - 1);
    return words_[pick(rng)];
}

ParetoLetterSampler::ParetoLetterSampler(double alpha, std::shared_ptr<const VertexGroupSpec> groups,
                                         std::int64_t max_magnitude)
    : alpha_(alpha), groups_(std::move(groups)), max_magnitude_(max_magnitude) {
    if (!(alpha_ > 0.0) || !std::isfinite(alpha_))
        fail(ErrorKind::invalid_argument, "pareto exponent must be positive");
    if (max_magnitude_ < 1) fail(ErrorKind::invalid_argument, "pareto magnitude cap must be >= 1");
}

Word ParetoLetterSampler::sample(Rng& rng) const {
    const Vertex v = std::uniform_int_distribution<Vertex>(0, groups_->size() - 1)(rng);
    const VertexGroup& group = (*groups_)[v];
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    while (true) {
        // P(M >= m) = m^-alpha for m >= 1.
        double u = 1.0 - unit(rng);
        double magnitude = std::floor(std::pow(u, -1.0 / alpha_));
        auto m = magnitude >= static_cast<double>(max_magnitude_) ? max_magnitude_
                                                                   : static_cast<std::int64_t>(magnitude);
        if (std::bernoulli_distribution(0.5)(rng)) m = -m;
        GroupElement g = group.power_of_generator(m);
        if (!group.is_identity(g)) return {{v, g}};
    }
}

std::shared_ptr<const NuSampler> parse_nu(std::string_view spec, const Graph& graph,
                                          std::shared_ptr<const VertexGroupSpec> groups) {
    auto colon = spec.find(':');
    if (colon == std::string_view::npos) fail(ErrorKind::invalid_argument, "nu spec needs a 'kind:' prefix");
    auto kind = spec.substr(0, colon);
    auto arg = spec.substr(colon + 1);
    if (kind == "fixed") return std::make_shared<FixedWordSampler>(parse_word(arg, graph, *groups), graph, *groups);
    if (kind == "list") {
        std::ifstream in{std::string(arg)};
        if (!in) fail(ErrorKind::io, "cannot open nu word list " + std::string(arg));
        std::vector<Word> words;
        std::string line;
        while (std::getline(in, line)) {
            if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            words.push_back(parse_word(line, graph, *groups));
        }
        return std::make_shared<WordListSampler>(std::move(words), graph, *groups);
    }
    if (kind == "letters") {
        if (!arg.empty()) fail(ErrorKind::invalid_argument, "letters: takes no argument");
        std::vector<Word> words;
        for (Vertex v = 0; v < graph.vertex_count(); ++v)
            for (std::int64_t e : {1, -1}) words.push_back({Syllable{v, (*groups)[v].power_of_generator(e)}});
        return std::make_shared<WordListSampler>(std::move(words), graph, *groups);
    }
    if (kind == "pareto") {
        std::string text(arg);
        std::size_t used = 0;
        double alpha = 0.0;
        try {
            alpha = std::stod(text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != text.size())
            fail(ErrorKind::invalid_argument, "bad pareto exponent '" + text + "'");
        return std::make_shared<ParetoLetterSampler>(alpha, std::move(groups));
    }
    fail(ErrorKind::invalid_argument, "unknown nu sampler '" + std::string(kind) + "'");
}

WalkTrace::WalkTrace(std::shared_ptr<const Graph> graph, std::shared_ptr<const VertexGroupSpec> groups)
    : graph_(std::move(graph)), groups_(std::move(groups)), origin_(graph_->vertex_count()), counts_{0} {
    if (groups_->size() != graph_->vertex_count())
        fail(ErrorKind::invalid_argument, "group spec does not match graph");
}

std::vector<Syllable> WalkTrace::s_sequence() const {
    std::vector<Syllable> out;
    out.reserve(steps_.size());
    for (const auto& st : steps_) out.push_back(st.s);
    return out;
}

std::vector<Word> WalkTrace::w_sequence() const {
    std::vector<Word> out;
    out.reserve(steps_.size());
    for (const auto& st : steps_) out.push_back(st.w);
    return out;
}

void WalkTrace::update_pivotals(const Piling& checkpoint) {
    while (!stack_.empty() && !is_prefix(stack_.back().anchor, checkpoint)) stack_.pop_back();
}

void WalkTrace::extend(const Syllable& s, const Word& w) {
    const std::int64_t k = length() + 1;
    const Piling& prev = full(k - 1);
    require_nontrivial(w, *graph_, *groups_);

    WalkStep st;
    st.s = s;
    st.w = w;
    st.local_geodesic = is_local_geodesic(prev, s, w, *graph_, *groups_);
    st.half = append(prev, s.vertex, s.value, *graph_, *groups_);
    update_pivotals(st.half);
    if (st.local_geodesic) stack_.push_back({k, st.half});

    st.full = st.half;
    for (const Syllable& x : w) st.full.append(x.vertex, x.value, *graph_, *groups_);
    update_pivotals(st.full);

    std::int64_t count = static_cast<std::int64_t>(stack_.size());
    if (!stack_.empty() && stack_.back().time == k) --count;
    counts_.push_back(count);
    steps_.push_back(std::move(st));
}

Syllable sample_mu(const Graph& graph, const VertexGroupSpec& groups, Rng& rng) {
    const Vertex v = std::uniform_int_distribution<Vertex>(0, graph.vertex_count() - 1)(rng);
    return {v, groups[v].sample_nontrivial(rng)};
}

WalkTrace run_walk(const WalkConfig& cfg) {
    if (!cfg.graph || !cfg.groups || !cfg.nu) fail(ErrorKind::invalid_argument, "incomplete walk config");
    if (cfg.steps < 0) fail(ErrorKind::invalid_argument, "walk length must be nonnegative");
    WalkTrace trace(cfg.graph, cfg.groups);
    Rng rng(cfg.seed);
    for (std::int64_t k = 1; k <= cfg.steps; ++k) {
        Syllable s = sample_mu(*cfg.graph, *cfg.groups, rng);
        Word w = cfg.nu->sample(rng);
        trace.extend(s, w);
    }
    return trace;
}

WalkTrace replay(std::shared_ptr<const Graph> graph, std::shared_ptr<const VertexGroupSpec> groups,
                 const std::vector<Syllable>& s, const std::vector<Word>& w) {
    if (s.size() != w.size()) fail(ErrorKind::invalid_argument, "replay: s and w lengths differ");
    WalkTrace trace(std::move(graph), std::move(groups));
    for (std::size_t k = 0; k < s.size(); ++k) trace.extend(s[k], w[k]);
    return trace;
}

namespace {

bool contains(const std::vector<Vertex>& sorted, Vertex v) {
    return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace

bool is_local_geodesic(const Piling& prev, const Syllable& s, const Word& w, const Graph& graph,
                       const VertexGroupSpec& groups) {
    if (contains(term(prev), s.vertex)) return false;
    auto t = term(append(prev, s.vertex, s.value, graph, groups));
    auto i = init(piling_of_word(w, graph, groups));
    std::vector<Vertex> shared;
    std::set_intersection(t.begin(), t.end(), i.begin(), i.end(), std::back_inserter(shared));
    return shared.empty();
}

namespace {

std::vector<bool> blocked_vertices(const Piling& prev, const Word& w, const Graph& graph,
                                   const VertexGroupSpec& groups) {
    std::vector<bool> blocked(graph.vertex_count(), false);
    for (Vertex v : term(prev)) blocked[v] = true;
    for (Vertex v : init(piling_of_word(w, graph, groups))) {
        blocked[v] = true;
        for (Vertex u : graph.neighbours(v)) blocked[u] = true;
    }
    return blocked;
}

}  // namespace

bool is_strong_pivot_choice(const Piling& prev, const Syllable& s, const Word& w, const Graph& graph,
                            const VertexGroupSpec& groups) {
    return !blocked_vertices(prev, w, graph, groups)[s.vertex];
}

std::int64_t count_strong_vertices(const Piling& prev, const Word& w, const Graph& graph,
                                   const VertexGroupSpec& groups) {
    auto blocked = blocked_vertices(prev, w, graph, groups);
    return std::count(blocked.begin(), blocked.end(), false);
}

std::vector<std::int64_t> pivotal_times(const WalkTrace& trace) {
    std::vector<std::int64_t> out;
    for (const auto& e : trace.pivot_stack())
        if (e.time < trace.length()) out.push_back(e.time);
    return out;
}

std::vector<std::int64_t> pivotal_times_bruteforce(const WalkTrace& trace, std::int64_t n) {
    if (n > trace.length()) fail(ErrorKind::invalid_argument, "bruteforce scan beyond trace length");
    std::vector<std::int64_t> out;
    for (std::int64_t k = 1; k < n; ++k) {
        const WalkStep& st = trace.step(k);
        if (!is_local_geodesic(trace.full(k - 1), st.s, st.w, trace.graph(), trace.groups())) continue;
        const Piling& anchor = st.half;
        bool pivotal = is_prefix(anchor, trace.full(k));
        for (std::int64_t j = k + 1; pivotal && j <= n; ++j)
            pivotal = is_prefix(anchor, trace.half(j)) && is_prefix(anchor, trace.full(j));
        if (pivotal) out.push_back(k);
    }
    return out;
}

PivotalReport pivotal_report(const WalkTrace& trace) {
    PivotalReport r;
    r.pivotal_times = pivotal_times(trace);
    r.A_n = static_cast<std::int64_t>(r.pivotal_times.size());
    r.syllable_length_Zn = trace.full(trace.length()).syllable_length();
    return r;
}

WalkTrace pivot_replace(const WalkTrace& trace, std::int64_t k, const Syllable& replacement) {
    auto times = pivotal_times(trace);
    if (!std::binary_search(times.begin(), times.end(), k))
        fail(ErrorKind::invalid_argument, "pivot_replace: time " + std::to_string(k) + " is not pivotal");
    const VertexGroup& group = trace.groups()[replacement.vertex];
    if (group.is_identity(replacement.value))
        fail(ErrorKind::invalid_argument, "pivot_replace: replacement is the identity");
    if (!is_strong_pivot_choice(trace.full(k - 1), replacement, trace.step(k).w, trace.graph(), trace.groups()))
        fail(ErrorKind::invalid_argument, "pivot_replace: replacement is not a strong choice");
    auto s = trace.s_sequence();
    s[static_cast<std::size_t>(k - 1)] = replacement;
    return replay(trace.graph_ptr(), trace.groups_ptr(), s, trace.w_sequence());
}

std::string trace_to_json(const WalkTrace& trace) {
    const Graph& g = trace.graph();
    const VertexGroupSpec& groups = trace.groups();
    nlohmann::json steps = nlohmann::json::array();
    for (std::int64_t k = 1; k <= trace.length(); ++k) {
        const WalkStep& st = trace.step(k);
        steps.push_back({{"k", k},
                         {"s", render_word({st.s}, g, groups)},
                         {"w", render_word(st.w, g, groups)},
                         {"half", render(st.half, g, groups)},
                         {"full", render(st.full, g, groups)},
                         {"local_geodesic", st.local_geodesic},
                         {"A", trace.pivotal_counts()[static_cast<std::size_t>(k)]}});
    }
    nlohmann::json stack = nlohmann::json::array();
    for (const auto& e : trace.pivot_stack()) stack.push_back({{"time", e.time}, {"anchor", render(e.anchor, g, groups)}});
    nlohmann::json doc = {{"groups", groups.describe()}, {"steps", steps}, {"pivot_stack", stack}};
    return doc.dump();
}

}  // namespace gpdrift
