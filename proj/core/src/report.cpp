#include "hopfgal/report.hpp"

#include <sstream>

namespace hopfgal {

void Report::add(const std::string& name, bool ok, const std::string& witness, int degree) {
    items.push_back({name, ok ? Status::Pass : Status::Fail, witness, degree});
}

void Report::add_unverified(const std::string& name, const std::string& note, int degree) {
    items.push_back({name, Status::Unverified, note, degree});
}

void Report::merge(const Report& sub) {
    for (const auto& it : sub.items) {
        CheckItem copy = it;
        copy.name = sub.title.empty() ? it.name : sub.title + "." + it.name;
        items.push_back(copy);
    }
    for (const auto& f : sub.assumption_flags) assumption_flags.push_back(f);
}

bool Report::pass() const {
    for (const auto& it : items)
        if (it.status == Status::Fail) return false;
    return true;
}

static const char* status_str(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        default: return "UNVERIFIED";
    }
}

std::string Report::text() const {
    std::ostringstream os;
    os << "== " << title << " ==\n";
    for (const auto& f : assumption_flags) os << "assumption: " << f << "\n";
    for (const auto& it : items) {
        os << "  [" << status_str(it.status) << "] " << it.name;
        if (it.degree >= 0) os << " (degree " << it.degree << ")";
        if (!it.witness.empty()) os << "  witness: " << it.witness;
        os << "\n";
    }
    os << (pass() ? "RESULT: PASS" : "RESULT: FAIL") << "\n";
    return os.str();
}

std::string Report::machine() const {
    std::ostringstream os;
    os << "format = hopfgal-report/1\n";
    os << "title = " << title << "\n";
    for (const auto& f : assumption_flags) os << "assumption = " << f << "\n";
    for (const auto& it : items) {
        os << "check." << it.name << ".status = " << status_str(it.status) << "\n";
        if (it.degree >= 0) os << "check." << it.name << ".degree = " << it.degree << "\n";
        if (!it.witness.empty()) os << "check." << it.name << ".witness = " << it.witness << "\n";
    }
    os << "result = " << (pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

}  // namespace hopfgal
