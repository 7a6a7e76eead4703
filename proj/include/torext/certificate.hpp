#ifndef TOREXT_CERTIFICATE_HPP
#define TOREXT_CERTIFICATE_HPP

#include <string>
#include <vector>

namespace torext {

// Whether a presentation lives over the generic fiber (ideal statements up to
// powers of pi) or over R itself (strict ideal statements).
enum class Level { Generic, Integral };

inline std::string to_string(Level l) { return l == Level::Generic ? "generic" : "integral"; }

enum class CheckStatus { Pass, Fail, Skipped };

inline std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skipped: return "skipped";
    }
    return "?";
}

struct CertificateEntry {
    std::string name;
    Level level = Level::Generic;
    CheckStatus status = CheckStatus::Skipped;
    std::string witness;  // failing polynomial or generator, empty on pass

    std::string to_string() const {
        std::string s = name + " " + torext::to_string(level) + " " + torext::to_string(status);
        if (!witness.empty()) s += " [witness: " + witness + "]";
        return s;
    }
};

// Record of which checks of the torsor/Hopf definitions were verified, at
// which level, with a witness for every failure.
struct Certificate {
    std::vector<CertificateEntry> entries;
    std::string label;  // e.g. "full torsor" vs "generic torsor with R-flat model candidate"

    void add(std::string name, Level level, CheckStatus status, std::string witness = "") {
        entries.push_back({std::move(name), level, status, std::move(witness)});
    }

    const CertificateEntry* find(const std::string& name) const {
        for (const auto& e : entries)
            if (e.name == name) return &e;
        return nullptr;
    }

    bool passed(const std::string& name) const {
        const CertificateEntry* e = find(name);
        return e && e->status == CheckStatus::Pass;
    }

    bool all_passed() const {
        for (const auto& e : entries)
            if (e.status == CheckStatus::Fail) return false;
        return true;
    }

    std::string summary() const {
        std::string s;
        for (const auto& e : entries) s += "  " + e.to_string() + "\n";
        return s;
    }
};

}  // namespace torext

#endif
