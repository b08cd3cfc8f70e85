#include "cascade/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "cascade/errors.hpp"

namespace cascade {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(Line& line) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++number_;
            if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
            std::istringstream ss(raw);
            std::vector<std::string> tokens;
            for (std::string tok; ss >> tok;) tokens.push_back(std::move(tok));
            if (tokens.empty()) continue;
            line = {number_, std::move(tokens)};
            return true;
        }
        return false;
    }

private:
    std::istream& in_;
    std::size_t number_ = 0;
};

[[noreturn]] void fail(const Line& line, const std::string& what) {
    throw FormatError("line " + std::to_string(line.number) + ": " + what);
}

std::size_t to_size(const Line& line, const std::string& s) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) fail(line, "expected a nonnegative integer, got '" + s + "'");
    return v;
}

double to_double(const Line& line, const std::string& s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) fail(line, "expected a number, got '" + s + "'");
    return v;
}

NodeId to_node(const Line& line, const std::string& s, std::size_t n) {
    const std::size_t v = to_size(line, s);
    if (v == 0 || v > n) fail(line, "node " + s + " outside 1.." + std::to_string(n));
    return v - 1;
}

std::size_t read_header(LineReader& reader) {
    Line line;
    if (!reader.next(line)) throw FormatError("missing 'N <n>' header");
    if (line.tokens.size() != 2 || line.tokens[0] != "N") fail(line, "expected 'N <n>' header");
    return to_size(line, line.tokens[1]);
}

// Graph, model and scenario files share one grammar, so a scenario file is also a
// valid model file and a valid graph file.
struct RawModel {
    std::size_t n = 0;
    std::vector<Edge> edges;
    std::optional<double> uniform_failure;
    std::vector<std::pair<NodeId, double>> failures;
    std::vector<std::pair<Edge, EdgeMechanism>> mechanisms;
};

RawModel read_raw(std::istream& in) {
    LineReader reader(in);
    RawModel raw;
    raw.n = read_header(reader);
    for (Line line; reader.next(line);) {
        const auto& t = line.tokens;
        if (t[0] == "P") {
            if (t.size() != 3) fail(line, "expected 'P <node|*> <failure_prob>'");
            const double p = to_double(line, t[2]);
            if (!(p >= 0.0 && p < 1.0)) fail(line, "failure probability must lie in [0, 1)");
            if (t[1] == "*")
                raw.uniform_failure = p;
            else
                raw.failures.emplace_back(to_node(line, t[1], raw.n), p);
        } else if (t[0] == "M") {
            if (t.size() != 5) fail(line, "expected 'M <parent> <child> <contact|noncontact> <delay>'");
            EdgeMechanism mech;
            if (t[3] == "contact")
                mech.kind = MechanismKind::contact;
            else if (t[3] == "noncontact")
                mech.kind = MechanismKind::non_contact;
            else
                fail(line, "unknown mechanism '" + t[3] + "'");
            mech.delay = to_double(line, t[4]);
            if (!(mech.delay >= 0.0)) fail(line, "delay must be nonnegative");
            raw.mechanisms.push_back({{to_node(line, t[1], raw.n), to_node(line, t[2], raw.n)}, mech});
        } else if (t.size() == 2) {
            const NodeId from = to_node(line, t[0], raw.n);
            const NodeId to = to_node(line, t[1], raw.n);
            if (from == to) fail(line, "self-loop");
            raw.edges.emplace_back(from, to);
        } else {
            fail(line, "unrecognized line");
        }
    }
    return raw;
}

CausalTree tree_from(const RawModel& raw) {
    if (raw.n == 0) throw FormatError("tree must have at least one node");
    if (raw.edges.size() + 1 != raw.n)
        throw FormatError("tree over " + std::to_string(raw.n) + " nodes needs " + std::to_string(raw.n - 1) +
                          " edges, found " + std::to_string(raw.edges.size()));
    try {
        return CausalTree::from_edges(raw.n, raw.edges);
    } catch (const std::logic_error& e) {
        throw FormatError(std::string("invalid tree: ") + e.what());
    }
}

CascadeModel model_from(const RawModel& raw) {
    if (raw.failures.empty()) return CascadeModel::uniform(tree_from(raw), raw.uniform_failure.value_or(0.0));
    std::vector<double> success(raw.n, 1.0 - raw.uniform_failure.value_or(0.0));
    for (const auto& [j, p] : raw.failures) success[j] = 1.0 - p;
    return CascadeModel(tree_from(raw), std::move(success));
}

std::optional<NodeId> parse_target(const Line& line, const std::string& s, std::size_t n) {
    if (s == "-") return std::nullopt;
    return to_node(line, s, n);
}

std::string target_label(const Intervention& iv) { return iv.target ? std::to_string(*iv.target + 1) : "-"; }

}  // namespace

Digraph read_graph(std::istream& in) {
    const RawModel raw = read_raw(in);
    Digraph g(raw.n);
    for (const auto& [a, b] : raw.edges) g.add_edge(a, b);
    return g;
}

CausalTree read_tree(std::istream& in) { return tree_from(read_raw(in)); }

CascadeModel read_model(std::istream& in) { return model_from(read_raw(in)); }

MechanizedModel read_scenario(std::istream& in) {
    const RawModel raw = read_raw(in);
    try {
        return MechanizedModel(model_from(raw), raw.mechanisms);
    } catch (const std::logic_error& e) {
        throw FormatError(std::string("invalid scenario: ") + e.what());
    }
}

InterventionalDataset read_dataset(std::istream& in) {
    LineReader reader(in);
    InterventionalDataset data;
    data.n = read_header(reader);
    for (Line line; reader.next(line);) {
        if (line.tokens.size() != 2) fail(line, "expected '<target|-> <bits>'");
        const std::string& bits = line.tokens[1];
        if (bits.size() != data.n)
            fail(line, "activation vector has " + std::to_string(bits.size()) + " entries, expected " + std::to_string(data.n));
        Episode ep{{parse_target(line, line.tokens[0], data.n)}, std::vector<std::uint8_t>(data.n)};
        for (std::size_t j = 0; j < data.n; ++j) {
            if (bits[j] != '0' && bits[j] != '1') fail(line, "activation vector must contain only 0 and 1");
            ep.activations[j] = bits[j] == '1' ? 1 : 0;
        }
        data.episodes.push_back(std::move(ep));
    }
    return data;
}

TraceDataset read_traces(std::istream& in) {
    LineReader reader(in);
    TraceDataset data;
    data.n = read_header(reader);
    EventTrace* cur = nullptr;
    for (Line line; reader.next(line);) {
        const auto& t = line.tokens;
        if (t[0] == "T") {
            if (t.size() != 2) fail(line, "expected 'T <target|->'");
            EventTrace trace;
            trace.episode = {{parse_target(line, t[1], data.n)}, std::vector<std::uint8_t>(data.n, 0)};
            trace.activation_time.assign(data.n, std::nullopt);
            data.traces.push_back(std::move(trace));
            cur = &data.traces.back();
            continue;
        }
        if (!cur) fail(line, "event before the first 'T' line");
        if (t[0] == "A") {
            if (t.size() != 3) fail(line, "expected 'A <node> <time>'");
            const NodeId j = to_node(line, t[1], data.n);
            const double time = to_double(line, t[2]);
            if (!(time >= 0.0)) fail(line, "activation time must be nonnegative");
            cur->activation_time[j] = time;
            cur->episode.activations[j] = 1;
        } else if (t[0] == "C") {
            if (t.size() != 4) fail(line, "expected 'C <time> <source> <target>'");
            cur->collisions.push_back({to_double(line, t[1]), to_node(line, t[2], data.n), to_node(line, t[3], data.n)});
        } else {
            fail(line, "unrecognized trace line");
        }
    }
    return data;
}

std::string format_double(double v) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

void write_graph(std::ostream& out, const Digraph& g) {
    out << "N " << g.size() << '\n';
    for (const auto& [a, b] : g.edges()) out << a + 1 << ' ' << b + 1 << '\n';
}

void write_tree(std::ostream& out, const CausalTree& t) { write_graph(out, Digraph(t.size(), t.edges())); }

void write_model(std::ostream& out, const CascadeModel& m) {
    write_tree(out, m.tree());
    if (auto p = m.uniform_failure()) {
        out << "P * " << format_double(*p) << '\n';
        return;
    }
    const auto& s = m.success();
    for (std::size_t j = 0; j < s.size(); ++j) out << "P " << j + 1 << ' ' << format_double(1.0 - s[j]) << '\n';
}

void write_episode(std::ostream& out, const Episode& ep) {
    out << target_label(ep.intervention) << ' ';
    for (auto x : ep.activations) out << (x ? '1' : '0');
    out << '\n';
}

void write_dataset(std::ostream& out, const InterventionalDataset& data) {
    out << "N " << data.n << '\n';
    for (const Episode& ep : data.episodes) write_episode(out, ep);
}

void write_trace(std::ostream& out, const EventTrace& trace) {
    out << "T " << target_label(trace.episode.intervention) << '\n';
    for (std::size_t j = 0; j < trace.activation_time.size(); ++j)
        if (trace.activation_time[j]) out << "A " << j + 1 << ' ' << format_double(*trace.activation_time[j]) << '\n';
    for (const Collision& c : trace.collisions)
        out << "C " << format_double(c.time) << ' ' << c.source + 1 << ' ' << c.target + 1 << '\n';
}

void write_traces(std::ostream& out, const TraceDataset& data) {
    out << "N " << data.n << '\n';
    for (const EventTrace& t : data.traces) write_trace(out, t);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace cascade
