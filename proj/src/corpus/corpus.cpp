#include "testgen/corpus/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace testgen::corpus {

namespace {

std::vector<std::string> split_tabs(const std::string& line)
{
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, '\t')) fields.push_back(field);
    return fields;
}

void require_dir(const std::filesystem::path& dir)
{
    if (!std::filesystem::is_directory(dir)) {
        throw std::runtime_error("corpus directory not found: " + dir.string());
    }
}

}  // namespace

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& dir)
{
    require_dir(dir);
    const auto path = dir / "manifest.tsv";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path.string());

    std::vector<ManifestEntry> entries;
    std::string line;
    int line_no = 0;
    bool header = true;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        if (header) {  // column names
            header = false;
            continue;
        }
        const auto fields = split_tabs(line);
        if (fields.size() < 4) {
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": expected 4 or 5 columns");
        }
        ManifestEntry e;
        e.module = fields[0];
        try {
            e.predicates = std::stoul(fields[1]);
            e.lines = std::stoul(fields[2]);
            e.max_branch_coverage = std::stod(fields[3]);
        } catch (const std::exception&) {
            throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": bad number");
        }
        if (fields.size() > 4) e.note = fields[4];
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<lang::SourceModule> load_corpus(const std::filesystem::path& dir)
{
    std::vector<lang::SourceModule> modules;
    for (const auto& entry : read_manifest(dir)) modules.push_back(lang::read_source(dir, entry.module));
    return modules;
}

std::vector<std::filesystem::path> negative_cases(const std::filesystem::path& dir)
{
    require_dir(dir);
    std::vector<std::filesystem::path> files;
    const auto negative = dir / "negative";
    if (!std::filesystem::is_directory(negative)) return files;
    for (const auto& item : std::filesystem::directory_iterator(negative)) {
        if (item.path().extension() == ".mdyn") files.push_back(item.path());
    }
    std::sort(files.begin(), files.end());
    return files;
}

}  // namespace testgen::corpus
