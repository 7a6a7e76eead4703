#include "torext/problem.hpp"

#include <fstream>
#include <sstream>

#include "torext/parser.hpp"
#include "json.hpp"

namespace torext {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string strip_comment(const std::string& s) {
    std::size_t h = s.find('#');
    return h == std::string::npos ? s : s.substr(0, h);
}

bool is_key_line(const std::string& line, std::string& key, std::string& value) {
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) return false;
    std::string k = trim(line.substr(0, colon));
    if (k.empty()) return false;
    for (char c : k)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    key = k;
    value = trim(line.substr(colon + 1));
    return true;
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
    throw InputError(origin + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace

Problem parse_problem_text(const std::string& text, const std::string& origin) {
    Problem p;
    bool field_seen = false;
    std::optional<std::int64_t> prime;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    std::string block_key;
    std::vector<std::pair<std::string, std::string>> entries;  // key -> inline value
    std::vector<std::pair<std::string, std::vector<std::string>>> blocks;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        std::string key, value;
        if (is_key_line(line, key, value)) {
            if (value.empty()) {
                block_key = key;
                blocks.push_back({key, {}});
            } else {
                block_key.clear();
                entries.push_back({key, value});
            }
        } else if (!block_key.empty()) {
            blocks.back().second.push_back(line);
        } else {
            fail(origin, lineno, "expected 'key: value' or a block entry");
        }
    }

    for (const auto& [key, value] : entries) {
        if (key == "field") {
            if (value == "Fp") {
                field_seen = true;
            } else if (value == "Q") {
                p.field = Field::rationals();
                field_seen = true;
            } else {
                throw InputError(origin + ": field must be 'Fp' or 'Q'");
            }
        } else if (key == "prime") {
            prime = std::stoll(value);
        } else if (key == "uniformizer") {
            p.uniformizer = value;
        } else if (key == "base") {
            std::istringstream bs(value);
            std::string kind;
            bs >> kind;
            if (kind == "affine") {
                p.base_kind = "affine";
                if (!(bs >> p.affine_n) || p.affine_n < 0)
                    throw InputError(origin + ": base: affine needs a dimension");
            } else if (kind == "alpha_p") {
                p.base_kind = "alpha_p";
            } else {
                throw InputError(origin + ": base must be 'affine N' or 'alpha_p'");
            }
        } else if (key == "base_vars") {
            std::istringstream bs(value);
            std::string name;
            while (bs >> name) p.base_vars.push_back(name);
        } else if (key == "scheme_vars") {
            std::istringstream bs(value);
            std::string name;
            while (bs >> name) p.scheme_vars.push_back(name);
        } else if (key == "group") {
            p.group_name = value;
        } else if (key == "family") {
            p.family = value;
        } else if (key == "rhs") {
            p.rhs_text = value;
        } else if (key == "a") {
            p.a_text = value;
        } else if (key == "d") {
            p.d = std::stoi(value);
        } else if (key == "level") {
            if (value != "generic" && value != "integral")
                throw InputError(origin + ": level must be 'generic' or 'integral'");
            p.level_text = value;
        } else if (key == "e") {
            p.e = static_cast<std::uint32_t>(std::stoul(value));
        } else if (key == "section") {
            p.section = value == "yes" || value == "true";
        } else {
            throw InputError(origin + ": unknown key '" + key + "'");
        }
    }

    for (const auto& [key, lines] : blocks) {
        if (key == "relations") {
            p.relation_texts = lines;
        } else if (key == "base_relations") {
            p.base_relation_texts = lines;
        } else if (key == "group_relations") {
            p.group_relation_texts = lines;
        } else if (key == "scheme_relations") {
            p.scheme_relation_texts = lines;
        } else if (key == "center") {
            p.center_texts = lines;
        } else if (key == "translate") {
            for (const std::string& line : lines) {
                std::size_t arrow = line.find("->");
                if (arrow == std::string::npos)
                    throw InputError(origin + ": translate entries use 'var -> poly'");
                p.translate.push_back({trim(line.substr(0, arrow)), trim(line.substr(arrow + 2))});
            }
        } else {
            throw InputError(origin + ": unknown block '" + key + "'");
        }
    }

    if (!field_seen) throw InputError(origin + ": missing 'field:'");
    if (prime) {
        p.field = Field::prime(*prime);
    } else if (p.field.kind() != FieldKind::Rationals) {
        throw InputError(origin + ": field Fp needs 'prime:'");
    }
    return p;
}

Problem parse_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open problem file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str(), path);
}

namespace {

std::vector<std::string> base_coord_names(const Problem& p) {
    if (!p.base_vars.empty()) return p.base_vars;
    int n = p.base_kind && *p.base_kind == "alpha_p" ? 1 : p.affine_n;
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("t_" + std::to_string(i));
    return names;
}

}  // namespace

BasePresentation problem_base(const Problem& p) {
    std::vector<std::string> coords = base_coord_names(p);
    RegistryPtr reg = make_base_registry(coords, p.uniformizer);
    std::vector<MultiPoly> rels;
    if (p.base_kind && *p.base_kind == "alpha_p") {
        if (p.field.kind() != FieldKind::PrimeField)
            throw InputError("alpha_p base needs a prime field");
        MultiPoly t = MultiPoly::variable(reg, p.field, reg->index_of(coords.at(0)));
        rels.push_back(t.pow(static_cast<std::uint64_t>(p.field.modulus())));
    }
    for (const std::string& text : p.base_relation_texts)
        rels.push_back(poly_parse(text, reg, p.field));
    return BasePresentation(reg, IdealPresentation(reg, p.field, std::move(rels)),
                            Level::Integral);
}

std::optional<GroupPresentation> problem_group(const Problem& p) {
    if (p.group_name && !p.group_relation_texts.empty())
        throw InputError("give either a builtin group name or explicit group relations");
    if (p.group_name) return builtin_group(*p.group_name, p.field);
    if (!p.group_relation_texts.empty()) {
        if (!p.group_d) throw InputError("explicit group relations need 'd:'");
        RegistryPtr reg = make_group_registry(*p.group_d);
        std::vector<MultiPoly> gens;
        for (const std::string& text : p.group_relation_texts)
            gens.push_back(poly_parse(text, reg, p.field));
        MultiPoly detrel = det_relation(reg, p.field, VarRole::GroupEntry);
        bool has_det = false;
        for (const MultiPoly& g : gens)
            if (g == detrel) has_det = true;
        if (!has_det) gens.push_back(detrel);
        Level lvl = p.level_text && *p.level_text == "integral" ? Level::Integral : Level::Generic;
        return GroupPresentation(*p.group_d, reg, IdealPresentation(reg, p.field, std::move(gens)),
                                 lvl);
    }
    return std::nullopt;
}

std::optional<TorsorPresentation> problem_torsor(const Problem& p, const BasePresentation& base) {
    const Field& field = p.field;
    if (p.family) {
        if (p.field.kind() != FieldKind::PrimeField)
            throw InputError("families need a prime field");
        std::int64_t prime = p.field.modulus();
        if (*p.family == "artin_schreier") {
            if (!p.rhs_text) throw InputError("artin_schreier needs 'rhs:'");
            return artin_schreier(prime, base, poly_parse(*p.rhs_text, base.registry(), field));
        }
        if (*p.family == "kummer") {
            if (!p.rhs_text) throw InputError("kummer needs 'rhs:'");
            return kummer(prime, base, poly_parse(*p.rhs_text, base.registry(), field));
        }
        if (*p.family == "m_torsor") {
            if (!p.a_text) throw InputError("m_torsor needs 'a:'");
            return m_torsor(prime, base, poly_parse(*p.a_text, base.registry(), field));
        }
        throw InputError("unknown family '" + *p.family + "'");
    }
    if (p.relation_texts.empty()) return std::nullopt;
    if (!p.d) throw InputError("explicit torsor relations need 'd:'");
    RegistryPtr reg = make_torsor_registry(base.registry(), *p.d);
    std::vector<MultiPoly> gens;
    for (const std::string& text : p.relation_texts) gens.push_back(poly_parse(text, reg, field));
    if (!p.translate.empty()) {
        RingMap subst = RingMap::identity(reg, field);
        for (const auto& [var, image] : p.translate)
            subst.set_image(reg->index_of(var), poly_parse(image, reg, field));
        for (MultiPoly& g : gens) g = subst.apply(g);
    }
    MultiPoly detrel = det_relation(reg, field, VarRole::TorsorEntry);
    bool has_det = false;
    for (const MultiPoly& g : gens)
        if (g == detrel) has_det = true;
    if (!has_det) gens.push_back(detrel);
    Level lvl = p.level_text && *p.level_text == "integral" ? Level::Integral : Level::Generic;
    return TorsorPresentation(base, *p.d, reg, IdealPresentation(reg, field, std::move(gens)), lvl);
}

std::optional<IdealPresentation> problem_scheme(const Problem& p) {
    if (p.scheme_relation_texts.empty() && p.scheme_vars.empty()) return std::nullopt;
    RegistrySpec spec;
    spec.uniformizer = p.uniformizer;
    if (p.base_kind) spec.base_coords = base_coord_names(p);
    spec.auxiliaries = p.scheme_vars;
    RegistryPtr reg = build_registry(spec);
    std::vector<MultiPoly> gens;
    for (const std::string& text : p.scheme_relation_texts)
        gens.push_back(poly_parse(text, reg, p.field));
    return IdealPresentation(reg, p.field, std::move(gens));
}

std::optional<IdealPresentation> problem_center(const Problem& p, const RegistryPtr& scheme_reg) {
    if (p.center_texts.empty()) return std::nullopt;
    std::vector<MultiPoly> gens;
    for (const std::string& text : p.center_texts)
        gens.push_back(poly_parse(text, scheme_reg, p.field));
    return IdealPresentation(scheme_reg, p.field, std::move(gens));
}

void Report::kv(const std::string& key, const std::string& value) {
    items_.push_back({key, value, {}});
    text_ += key + ": " + value + "\n";
}

void Report::block(const std::string& key, const std::vector<std::string>& lines) {
    items_.push_back({key, std::nullopt, lines});
    text_ += key + ":\n";
    for (const std::string& line : lines) text_ += "  " + line + "\n";
}

std::string Report::json() const {
    nlohmann::ordered_json j;
    for (const Item& item : items_) {
        if (item.value)
            j[item.key] = *item.value;
        else
            j[item.key] = item.lines;
    }
    return j.dump(2) + "\n";
}

std::vector<std::string> relation_strings(const IdealPresentation& I) {
    std::vector<std::string> out;
    for (const MultiPoly& g : I.generators()) out.push_back(g.to_string());
    if (out.empty()) out.push_back("(none)");
    return out;
}

void report_certificate(Report& r, const Certificate& cert) {
    std::vector<std::string> lines;
    for (const CertificateEntry& e : cert.entries) lines.push_back(e.to_string());
    r.block("certificate", lines);
    r.kv("certificate-label", cert.label);
}

}  // namespace torext
