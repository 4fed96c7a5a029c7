#include "mapcanon/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mapcanon/errors.hpp"

namespace mapcanon {

namespace {

bool looks_like_json(const std::filesystem::path& p) {
    const auto ext = p.extension().string();
    return ext == ".json" || ext == ".jsonl" || ext == ".ndjson";
}

void load_json_stream(const std::string& path, const std::string& content,
                      CorpusLoad& out) {
    // A file is JSON lines when its first non-blank line parses on its own;
    // otherwise it is treated as one (possibly pretty-printed) document.
    std::istringstream in(content);
    std::string first_line;
    while (std::getline(in, first_line)) {
        if (first_line.find_first_not_of(" \t\r\n") != std::string::npos) break;
    }
    bool line_mode = false;
    try {
        parse_graph(first_line, GraphFormat::json);
        line_mode = true;
    } catch (const std::exception&) {
        line_mode = false;
    }

    if (!line_mode) {
        try {
            out.graphs.push_back(parse_graph(content, GraphFormat::json));
        } catch (const std::exception& e) {
            out.errors.push_back(path + ": " + e.what());
        }
        return;
    }

    std::istringstream lines(content);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        try {
            out.graphs.push_back(parse_graph(line, GraphFormat::json));
        } catch (const std::exception& e) {
            out.errors.push_back(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
}

}  // namespace

CorpusLoad load_graphs_from_file(const std::string& path, GraphFormat format) {
    CorpusLoad out;
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        out.errors.push_back(path + ": cannot open");
        return out;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string content = buffer.str();
    if (format == GraphFormat::json) {
        load_json_stream(path, content, out);
    } else {
        try {
            out.graphs.push_back(parse_graph(content, GraphFormat::edgelist));
        } catch (const std::exception& e) {
            out.errors.push_back(path + ": " + e.what());
        }
    }
    return out;
}

CorpusLoad load_graphs(const std::string& path) {
    namespace fs = std::filesystem;
    CorpusLoad out;
    if (fs::is_directory(path)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(path))
            if (entry.is_regular_file()) files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            const auto format =
                looks_like_json(f) ? GraphFormat::json : GraphFormat::edgelist;
            CorpusLoad one = load_graphs_from_file(f.string(), format);
            std::move(one.graphs.begin(), one.graphs.end(),
                      std::back_inserter(out.graphs));
            std::move(one.errors.begin(), one.errors.end(),
                      std::back_inserter(out.errors));
        }
        return out;
    }
    if (!fs::exists(path)) {
        out.errors.push_back(path + ": no such file or directory");
        return out;
    }
    const auto format = looks_like_json(fs::path(path)) ? GraphFormat::json
                                                        : GraphFormat::edgelist;
    return load_graphs_from_file(path, format);
}

}  // namespace mapcanon
