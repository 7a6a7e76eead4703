#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "torext/problem.hpp"

namespace {

using namespace torext;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitResource = 2;
constexpr int kExitCertificate = 3;

void emit(const Report& report, const std::string& report_path) {
    std::cout << report.text();
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw InputError("cannot write report file '" + report_path + "'");
        out << report.json();
    }
}

int cmd_extend(const std::string& file, const std::string& mode_text, std::int64_t e_cap,
               const std::string& report_path) {
    Problem problem = parse_problem_file(file);
    BasePresentation base = problem_base(problem);
    std::optional<TorsorPresentation> torsor = problem_torsor(problem, base);
    if (!torsor) throw InputError("extend needs a torsor (family or relations)");
    StoppingMode mode =
        mode_text == "first-model" ? StoppingMode::FirstModel : StoppingMode::ProductFiber;
    std::optional<std::uint32_t> cap;
    if (e_cap >= 0) cap = static_cast<std::uint32_t>(e_cap);

    ExtensionResult result = extend_torsor(*torsor, mode, cap);
    bool equivalent = verify_generic_equivalence(*torsor, result);

    Report report;
    report.kv("command", "extend");
    report.kv("status", "ok");
    report.kv("mode", to_string(mode));
    report.kv("e", std::to_string(result.e));
    report.kv("sigma", result.sigma.describe());
    std::vector<std::string> input_lines;
    if (problem.family) {
        std::string params = problem.rhs_text ? "rhs = " + *problem.rhs_text
                                              : (problem.a_text ? "a = " + *problem.a_text : "");
        input_lines.push_back(*problem.family + ", " + params);
    }
    for (const MultiPoly& f : torsor->relations().generators()) input_lines.push_back(f.to_string());
    report.block("input-relations", input_lines);
    report.block("base-relations", relation_strings(result.base_model.relations()));
    report.block("group-relations", relation_strings(result.group_model.relations()));
    report.block("torsor-relations", relation_strings(result.torsor_model.relations()));
    report_certificate(report, result.certificate);
    report.kv("generic-equivalence", equivalent ? "true" : "false");
    emit(report, report_path);
    return equivalent ? kExitOk : kExitCertificate;
}

int cmd_verify(const std::string& file, const std::string& level_text,
               const std::string& report_path) {
    Problem problem = parse_problem_file(file);
    std::optional<GroupPresentation> group = problem_group(problem);

    Report report;
    report.kv("command", "verify");
    Certificate cert;

    BasePresentation base = problem_base(problem);
    std::optional<TorsorPresentation> torsor = problem_torsor(problem, base);
    if (torsor) {
        if (!level_text.empty()) {
            Level lvl = level_text == "integral" ? Level::Integral : Level::Generic;
            torsor = TorsorPresentation(torsor->base(), torsor->dim(), torsor->registry(),
                                        torsor->relations(), lvl);
        }
        GroupPresentation against = group ? *group : fiber_group(*torsor);
        report.kv("subject", "torsor");
        report.kv("level", to_string(torsor->level()));
        report.block("torsor-relations", relation_strings(torsor->relations()));
        report.block("group-relations", relation_strings(against.relations()));
        cert = verify_torsor(*torsor, against);
    } else if (group) {
        report.kv("subject", "group");
        report.kv("level", to_string(group->level()));
        report.block("group-relations", relation_strings(group->relations()));
        cert = verify_hopf(*group);
        cert.label = cert.all_passed() ? "hopf algebra" : "not a hopf presentation";
    } else {
        throw InputError("verify needs a torsor or a group");
    }
    report_certificate(report, cert);
    emit(report, report_path);
    return cert.all_passed() ? kExitOk : kExitCertificate;
}

int cmd_blowup(const std::string& file, const std::vector<std::string>& center_flags, bool section,
               std::int64_t e_flag, const std::string& report_path) {
    Problem problem = parse_problem_file(file);
    if (section) problem.section = true;
    if (e_flag >= 0) problem.e = static_cast<std::uint32_t>(e_flag);
    for (const std::string& c : center_flags) problem.center_texts.push_back(c);

    Report report;
    report.kv("command", "blowup");

    std::optional<IdealPresentation> scheme = problem_scheme(problem);
    if (scheme) {
        std::optional<IdealPresentation> center = problem_center(problem, scheme->registry());
        if (!center) throw InputError("scheme blow-up needs a center");
        IdealPresentation result = blowup_at_closed(*scheme, *center);
        report.kv("status", "ok");
        report.kv("kind", "closed-center");
        std::vector<std::string> vars;
        for (std::size_t v = 0; v < result.registry()->size(); ++v)
            vars.push_back(result.registry()->name(v));
        report.block("vars", vars);
        report.block("relations", relation_strings(result));
        emit(report, report_path);
        return kExitOk;
    }

    BasePresentation base = problem_base(problem);
    std::optional<TorsorPresentation> torsor = problem_torsor(problem, base);
    std::optional<GroupPresentation> group = problem_group(problem);

    if (problem.section) {
        if (torsor) {
            GroupPresentation against = group ? *group : fiber_group(*torsor);
            auto [blown_torsor, blown_group] = blowup_torsor_at_section(*torsor, against);
            report.kv("status", "ok");
            report.kv("kind", "torsor-at-section");
            report.block("group-relations", relation_strings(blown_group.relations()));
            report.block("torsor-relations", relation_strings(blown_torsor.relations()));
            emit(report, report_path);
            return kExitOk;
        }
        if (group) {
            GroupPresentation blown = blowup_group_at_unit_section(*group);
            report.kv("status", "ok");
            report.kv("kind", "group-at-unit-section");
            report.block("group-relations", relation_strings(blown.relations()));
            emit(report, report_path);
            return kExitOk;
        }
        throw InputError("section blow-up needs a torsor or a group");
    }

    if (problem.e) {
        auto [blown, map] = blowup_base_origin(base, *problem.e);
        report.kv("status", "ok");
        report.kv("kind", "base-origin");
        report.kv("e", std::to_string(*problem.e));
        report.kv("map", map.describe());
        report.block("base-relations", relation_strings(blown.relations()));
        emit(report, report_path);
        return kExitOk;
    }
    throw InputError("blowup needs a center, --section, or e");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact extension of pointed torsors over discrete valuation rings"};
    app.require_subcommand(1);

    std::string file, report_path;
    std::string mode_text = "product";
    std::string level_text;
    std::int64_t e_cap = -1, e_flag = -1;
    bool section = false;
    std::vector<std::string> center_flags;

    CLI::App* extend = app.add_subcommand("extend", "extend a generic torsor to an integral model");
    extend->add_option("problem", file, "problem file")->required();
    extend->add_option("--mode", mode_text, "stopping mode")
        ->check(CLI::IsMember({"product", "first-model"}));
    extend->add_option("--e-cap", e_cap, "blow-up exponent cap");
    extend->add_option("--report", report_path, "write a JSON report here");

    CLI::App* verify = app.add_subcommand("verify", "verify torsor / Hopf certificates");
    verify->add_option("problem", file, "problem file")->required();
    verify->add_option("--level", level_text, "override the verification level")
        ->check(CLI::IsMember({"generic", "integral"}));
    verify->add_option("--report", report_path, "write a JSON report here");

    CLI::App* blowup = app.add_subcommand("blowup", "Neron blow-ups of schemes, groups, torsors");
    blowup->add_option("problem", file, "problem file")->required();
    blowup->add_option("--center", center_flags, "extra center generators");
    blowup->add_flag("--section", section, "blow up at the unit/identity section");
    blowup->add_option("--e", e_flag, "base blow-up exponent");
    blowup->add_option("--report", report_path, "write a JSON report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (extend->parsed()) return cmd_extend(file, mode_text, e_cap, report_path);
        if (verify->parsed()) return cmd_verify(file, level_text, report_path);
        if (blowup->parsed()) return cmd_blowup(file, center_flags, section, e_flag, report_path);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n" << e.diagnostics;
        return kExitResource;
    } catch (const ResourceLimit& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
