#include "wavelab/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wavelab::io {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    cells.push_back(cur);
    return cells;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CsvBuilder::CsvBuilder(std::vector<std::string> header) : columns_(header.size()) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) body_.push_back(',');
        body_ += header[i];
    }
    body_.push_back('\n');
}

void CsvBuilder::add_row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_) throw std::invalid_argument("CsvBuilder: column count mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) body_.push_back(',');
        body_ += cells[i];
    }
    body_.push_back('\n');
}

void CsvBuilder::add_row(const std::vector<double>& cells) {
    std::vector<std::string> text(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) text[i] = format_double(cells[i]);
    add_row(text);
}

int CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

double CsvTable::number(std::size_t row, int col) const {
    if (col < 0 || row >= rows.size() || static_cast<std::size_t>(col) >= rows[row].size())
        throw std::out_of_range("CsvTable: bad cell reference");
    return std::strtod(rows[row][static_cast<std::size_t>(col)].c_str(), nullptr);
}

CsvTable read_csv(const std::string& path) {
    const std::string text = read_file(path);
    CsvTable table;
    std::istringstream ss(text);
    std::string line;
    bool first = true;
    while (std::getline(ss, line)) {
        if (trim(line).empty()) continue;
        auto cells = split_csv_line(line);
        if (first) {
            table.header = cells;
            first = false;
        } else {
            table.rows.push_back(cells);
        }
    }
    return table;
}

std::string csv_without_columns(const CsvTable& table, const std::vector<std::string>& drop) {
    std::vector<bool> keep(table.header.size(), true);
    for (const auto& name : drop) {
        const int c = table.column(name);
        if (c >= 0) keep[static_cast<std::size_t>(c)] = false;
    }
    std::string out;
    auto emit = [&](const std::vector<std::string>& cells) {
        bool firstcell = true;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i < keep.size() && !keep[i]) continue;
            if (!firstcell) out.push_back(',');
            out += cells[i];
            firstcell = false;
        }
        out.push_back('\n');
    };
    emit(table.header);
    for (const auto& row : table.rows) emit(row);
    return out;
}

KeyValueFile KeyValueFile::parse_text(const std::string& text, const std::string& source_name) {
    KeyValueFile kv;
    kv.source_name = source_name;
    std::istringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(source_name + ":" + std::to_string(lineno) +
                                     ": expected 'key = value'");
        Entry e;
        e.key = trim(t.substr(0, eq));
        e.value = trim(t.substr(eq + 1));
        e.line = lineno;
        if (e.key.empty())
            throw std::runtime_error(source_name + ":" + std::to_string(lineno) + ": empty key");
        kv.entries.push_back(std::move(e));
    }
    return kv;
}

KeyValueFile KeyValueFile::parse_file(const std::string& path) {
    return parse_text(read_file(path), path);
}

bool KeyValueFile::has(const std::string& key) const { return find(key).has_value(); }

std::optional<std::string> KeyValueFile::find(const std::string& key) const {
    // last assignment wins, as in ordinary config files
    std::optional<std::string> result;
    for (const auto& e : entries)
        if (e.key == key) result = e.value;
    return result;
}

void KeyValueFile::fail(const std::string& key, const std::string& what) const {
    int line = 0;
    for (const auto& e : entries)
        if (e.key == key) line = e.line;
    throw std::runtime_error(source_name + ":" + std::to_string(line) + ": key '" + key + "' " +
                             what);
}

std::string KeyValueFile::get_string(const std::string& key) const {
    auto v = find(key);
    if (!v) fail(key, "is required but missing");
    return *v;
}

std::string KeyValueFile::get_string(const std::string& key, const std::string& fallback) const {
    auto v = find(key);
    return v ? *v : fallback;
}

double KeyValueFile::get_double(const std::string& key) const {
    auto v = find(key);
    if (!v) fail(key, "is required but missing");
    char* end = nullptr;
    const double d = std::strtod(v->c_str(), &end);
    if (end == v->c_str() || trim(end)[0] != '\0') fail(key, "is not a number: '" + *v + "'");
    return d;
}

double KeyValueFile::get_double(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

long long KeyValueFile::get_int(const std::string& key) const {
    auto v = find(key);
    if (!v) fail(key, "is required but missing");
    char* end = nullptr;
    const long long i = std::strtoll(v->c_str(), &end, 10);
    if (end == v->c_str() || trim(end)[0] != '\0') fail(key, "is not an integer: '" + *v + "'");
    return i;
}

long long KeyValueFile::get_int(const std::string& key, long long fallback) const {
    return has(key) ? get_int(key) : fallback;
}

bool KeyValueFile::get_bool(const std::string& key, bool fallback) const {
    auto v = find(key);
    if (!v) return fallback;
    if (*v == "true" || *v == "1" || *v == "yes") return true;
    if (*v == "false" || *v == "0" || *v == "no") return false;
    fail(key, "is not a boolean: '" + *v + "'");
}

std::vector<double> KeyValueFile::get_double_list(const std::string& key) const {
    auto v = find(key);
    if (!v) fail(key, "is required but missing");
    std::vector<double> out;
    std::string cur;
    auto flush = [&]() {
        const std::string t = trim(cur);
        cur.clear();
        if (t.empty()) return;
        char* end = nullptr;
        const double d = std::strtod(t.c_str(), &end);
        if (end == t.c_str() || trim(end)[0] != '\0')
            fail(key, "has a non-numeric list element: '" + t + "'");
        out.push_back(d);
    };
    for (char c : *v) {
        if (c == ',') flush();
        else cur.push_back(c);
    }
    flush();
    if (out.empty()) fail(key, "is an empty list");
    return out;
}

void ReportBuilder::add(const std::string& key, const std::string& value) {
    body_ += key;
    body_ += " = ";
    body_ += value;
    body_.push_back('\n');
}

void ReportBuilder::add(const std::string& key, double value) { add(key, format_double(value)); }

void ReportBuilder::add(const std::string& key, bool value) {
    add(key, std::string(value ? "true" : "false"));
}

}  // namespace wavelab::io
