#include "sbundle/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace sbundle {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

long long parse_integer(std::string_view token, int line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(line, "malformed integer '" + std::string(token) + "'");
    return value;
}

GraphFileFormat detect_format(const std::vector<std::string_view>& lines) {
    for (const auto& raw : lines) {
        auto tokens = tokenize(raw);
        if (tokens.empty()) continue;
        if (tokens[0] == "p" || tokens[0] == "e") return GraphFileFormat::dimacs;
        if (tokens[0].front() == '%' || tokens[0].front() == '#' || tokens[0] == "c")
            continue;
        return GraphFileFormat::edge_list;
    }
    return GraphFileFormat::dimacs;  // comment-only input: report the missing header
}

ParsedGraph parse_dimacs(const std::vector<std::string_view>& lines) {
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        int line = static_cast<int>(i) + 1;
        auto tokens = tokenize(lines[i]);
        if (tokens.empty() || tokens[0] == "c") continue;
        if (tokens[0] == "p") {
            if (n >= 0) throw ParseError(line, "duplicate p line");
            if (tokens.size() != 4 || tokens[1] != "edge")
                throw ParseError(line, "expected 'p edge <vertices> <edges>'");
            long long declared_n = parse_integer(tokens[2], line);
            long long declared_m = parse_integer(tokens[3], line);
            if (declared_n < 0 || declared_m < 0)
                throw ParseError(line, "negative size in p line");
            n = static_cast<int>(declared_n);
        } else if (tokens[0] == "e") {
            if (n < 0) throw ParseError(line, "e line before p line");
            if (tokens.size() != 3) throw ParseError(line, "expected 'e <u> <v>'");
            long long u = parse_integer(tokens[1], line);
            long long v = parse_integer(tokens[2], line);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(line, "endpoint outside [1, vertices]");
            edges.emplace_back(static_cast<int>(u) - 1, static_cast<int>(v) - 1);
        } else {
            throw ParseError(line, "unrecognized line '" + std::string(tokens[0]) + "...'");
        }
    }
    if (n < 0) throw ParseError(static_cast<int>(lines.size()), "missing p line");
    ParsedGraph out;
    out.format = GraphFileFormat::dimacs;
    out.graph = Graph::from_edges(n, edges);
    out.labels.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) out.labels[static_cast<std::size_t>(v)] = v + 1;
    return out;
}

ParsedGraph parse_edge_list(const std::vector<std::string_view>& lines) {
    std::vector<long long> labels;
    std::unordered_map<long long, int> id_of;
    std::vector<std::pair<int, int>> edges;
    auto intern = [&](long long label) {
        auto [it, inserted] = id_of.try_emplace(label, static_cast<int>(labels.size()));
        if (inserted) labels.push_back(label);
        return it->second;
    };
    bool saw_data = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        int line = static_cast<int>(i) + 1;
        auto tokens = tokenize(lines[i]);
        if (tokens.empty() || tokens[0].front() == '%' || tokens[0].front() == '#') continue;
        if (tokens.size() == 3 && !saw_data) {
            // Coordinate-format size line (rows cols nonzeros); validate and skip.
            for (const auto& t : tokens) parse_integer(t, line);
            saw_data = true;
            continue;
        }
        if (tokens.size() != 2)
            throw ParseError(line, "expected two vertex labels");
        saw_data = true;
        long long u = parse_integer(tokens[0], line);
        long long v = parse_integer(tokens[1], line);
        if (u < 0 || v < 0) throw ParseError(line, "negative vertex label");
        int iu = intern(u);  // sequenced before intern(v): ids follow appearance order
        int iv = intern(v);
        edges.emplace_back(iu, iv);
    }
    ParsedGraph out;
    out.format = GraphFileFormat::edge_list;
    out.graph = Graph::from_edges(static_cast<int>(labels.size()), edges);
    out.labels = std::move(labels);
    return out;
}

std::string csv_escape(const std::string& field) {
    bool needs_quotes = field.find_first_of(",\" \n") != std::string::npos;
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string format_double(double value) {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return std::string(buffer, ptr);
}

std::string witness_cell(const std::vector<long long>& witness) {
    std::string out;
    for (std::size_t i = 0; i < witness.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(witness[i]);
    }
    return out;
}

constexpr std::string_view kCsvHeader =
    "instance,s,size,witness,reduced_v,reduced_e,tree_nodes,time_s,timed_out,variant";

std::vector<std::string> split_csv_row(const std::string& row, int line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < row.size(); ++i) {
        char c = row[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < row.size() && row[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) throw ParseError(line, "unterminated quoted field");
    fields.push_back(std::move(cur));
    return fields;
}

nlohmann::ordered_json to_json(const ResultRecord& r) {
    return nlohmann::ordered_json{
        {"instance", r.instance}, {"s", r.s},
        {"size", r.size},         {"witness", r.witness},
        {"reduced_v", r.reduced_v}, {"reduced_e", r.reduced_e},
        {"tree_nodes", r.tree_nodes}, {"time_s", r.time_s},
        {"timed_out", r.timed_out},   {"variant", r.variant}};
}

}  // namespace

ParsedGraph parse_graph(std::string_view text, std::optional<GraphFileFormat> hint) {
    auto lines = split_lines(text);
    GraphFileFormat format = hint ? *hint : detect_format(lines);
    return format == GraphFileFormat::dimacs ? parse_dimacs(lines) : parse_edge_list(lines);
}

ParsedGraph load_graph_file(const std::string& path, std::optional<GraphFileFormat> hint) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str(), hint);
}

void write_results(std::span<const ResultRecord> records, ResultFormat format,
                   std::ostream& out) {
    if (format == ResultFormat::csv) {
        out << kCsvHeader << '\n';
        for (const auto& r : records) {
            out << csv_escape(r.instance) << ',' << r.s << ',' << r.size << ','
                << csv_escape(witness_cell(r.witness)) << ',' << r.reduced_v << ','
                << r.reduced_e << ',' << r.tree_nodes << ',' << format_double(r.time_s) << ','
                << (r.timed_out ? "true" : "false") << ',' << csv_escape(r.variant) << '\n';
        }
        return;
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    out << arr.dump(2) << '\n';
}

std::vector<ResultRecord> read_results_csv(std::istream& in) {
    std::vector<ResultRecord> records;
    std::string row;
    if (!std::getline(in, row)) return records;
    if (!row.empty() && row.back() == '\r') row.pop_back();
    if (row != kCsvHeader) throw ParseError(1, "unexpected CSV header");
    int line = 1;
    while (std::getline(in, row)) {
        ++line;
        if (!row.empty() && row.back() == '\r') row.pop_back();
        if (row.empty()) continue;
        auto fields = split_csv_row(row, line);
        if (fields.size() != 10) throw ParseError(line, "expected 10 fields");
        ResultRecord r;
        r.instance = fields[0];
        r.s = static_cast<int>(parse_integer(fields[1], line));
        r.size = static_cast<int>(parse_integer(fields[2], line));
        for (auto token : tokenize(fields[3])) r.witness.push_back(parse_integer(token, line));
        r.reduced_v = static_cast<int>(parse_integer(fields[4], line));
        r.reduced_e = static_cast<int>(parse_integer(fields[5], line));
        r.tree_nodes = static_cast<std::uint64_t>(parse_integer(fields[6], line));
        r.time_s = std::stod(fields[7]);
        if (fields[8] == "true") r.timed_out = true;
        else if (fields[8] == "false") r.timed_out = false;
        else throw ParseError(line, "timed_out must be true or false");
        r.variant = fields[9];
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<ResultRecord> read_results_json(std::istream& in) {
    nlohmann::json arr = nlohmann::json::parse(in);
    std::vector<ResultRecord> records;
    for (const auto& item : arr) {
        ResultRecord r;
        r.instance = item.at("instance").get<std::string>();
        r.s = item.at("s").get<int>();
        r.size = item.at("size").get<int>();
        r.witness = item.at("witness").get<std::vector<long long>>();
        r.reduced_v = item.at("reduced_v").get<int>();
        r.reduced_e = item.at("reduced_e").get<int>();
        r.tree_nodes = item.at("tree_nodes").get<std::uint64_t>();
        r.time_s = item.at("time_s").get<double>();
        r.timed_out = item.at("timed_out").get<bool>();
        r.variant = item.at("variant").get<std::string>();
        records.push_back(std::move(r));
    }
    return records;
}

}  // namespace sbundle
