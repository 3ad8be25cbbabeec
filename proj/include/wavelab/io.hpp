#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wavelab::io {

/// Shortest round-trippable decimal form of a double ("%.17g").
std::string format_double(double v);

/// Writes content to path via a temporary file + rename, so readers never
/// observe a partially written file.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

/// Minimal CSV builder; all outputs of the project go through this so the
/// byte layout is uniform and reproducible.
class CsvBuilder {
public:
    explicit CsvBuilder(std::vector<std::string> header);
    void add_row(const std::vector<std::string>& cells);
    void add_row(const std::vector<double>& cells);
    const std::string& str() const { return body_; }
    std::size_t columns() const { return columns_; }

private:
    std::size_t columns_;
    std::string body_;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(const std::string& name) const;  // -1 when absent
    double number(std::size_t row, int col) const;
};

CsvTable read_csv(const std::string& path);

/// Re-serializes a CSV with the named columns removed; used to compare
/// result bodies while ignoring volatile fields such as wall_time.
std::string csv_without_columns(const CsvTable& table, const std::vector<std::string>& drop);

/// Flat `key = value` file: the single config/report dialect of the project.
struct KeyValueFile {
    struct Entry {
        std::string key;
        std::string value;
        int line = 0;
    };
    std::string source_name;
    std::vector<Entry> entries;

    static KeyValueFile parse_text(const std::string& text, const std::string& source_name);
    static KeyValueFile parse_file(const std::string& path);

    bool has(const std::string& key) const;
    std::optional<std::string> find(const std::string& key) const;

    // Typed getters; throw std::runtime_error with "file:line:" diagnostics.
    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    long long get_int(const std::string& key) const;
    long long get_int(const std::string& key, long long fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<double> get_double_list(const std::string& key) const;

private:
    [[noreturn]] void fail(const std::string& key, const std::string& what) const;
};

/// Ordered flat report writer (same dialect as the config files).
class ReportBuilder {
public:
    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, double value);
    void add(const std::string& key, bool value);
    const std::string& str() const { return body_; }

private:
    std::string body_;
};

}  // namespace wavelab::io
