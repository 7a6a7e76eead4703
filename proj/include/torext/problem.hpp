#ifndef TOREXT_PROBLEM_HPP
#define TOREXT_PROBLEM_HPP

#include <optional>
#include <string>
#include <vector>

#include "torext/extend.hpp"
#include "torext/families.hpp"

namespace torext {

// Line-oriented problem file: "key: value" headers plus block keys
// (relations:, base_relations:, group_relations:, scheme_relations:, center:,
// translate:) whose entries follow one per line until the next key. '#'
// starts a comment; blank lines are ignored.
struct Problem {
    Field field = Field::rationals();
    std::string uniformizer = "pi";

    std::optional<std::string> base_kind;  // "affine" | "alpha_p"
    int affine_n = 1;
    std::vector<std::string> base_vars;          // optional coordinate names
    std::vector<std::string> base_relation_texts;

    std::optional<std::string> group_name;       // builtin name
    std::optional<int> group_d;
    std::vector<std::string> group_relation_texts;

    std::optional<std::string> family;  // artin_schreier | kummer | m_torsor
    std::optional<std::string> rhs_text;
    std::optional<std::string> a_text;

    std::optional<int> d;
    std::vector<std::string> relation_texts;
    std::optional<std::string> level_text;  // generic | integral
    std::vector<std::pair<std::string, std::string>> translate;

    std::vector<std::string> scheme_vars;
    std::vector<std::string> scheme_relation_texts;
    std::vector<std::string> center_texts;
    std::optional<std::uint32_t> e;
    bool section = false;
};

Problem parse_problem_file(const std::string& path);
Problem parse_problem_text(const std::string& text, const std::string& origin = "<input>");

// Materialization. Throws InputError / the module errors on bad data.
BasePresentation problem_base(const Problem& p);
std::optional<GroupPresentation> problem_group(const Problem& p);
// The torsor described by family or explicit relations (nullopt when absent).
std::optional<TorsorPresentation> problem_torsor(const Problem& p, const BasePresentation& base);
// Scheme presentation for ideal-level blow-ups (registry: pi + base + scheme vars).
std::optional<IdealPresentation> problem_scheme(const Problem& p);
std::optional<IdealPresentation> problem_center(const Problem& p, const RegistryPtr& scheme_reg);

// Deterministic key-value report block helpers.
class Report {
  public:
    void kv(const std::string& key, const std::string& value);
    void block(const std::string& key, const std::vector<std::string>& lines);
    std::string text() const { return text_; }
    std::string json() const;

  private:
    struct Item {
        std::string key;
        std::optional<std::string> value;
        std::vector<std::string> lines;
    };
    std::vector<Item> items_;
    std::string text_;
};

std::vector<std::string> relation_strings(const IdealPresentation& I);
void report_certificate(Report& r, const Certificate& cert);

}  // namespace torext

#endif
