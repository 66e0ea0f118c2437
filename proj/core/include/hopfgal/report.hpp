#pragma once

#include <string>
#include <vector>

namespace hopfgal {

enum class Status { Pass, Fail, Unverified };

struct CheckItem {
    std::string name;
    Status status = Status::Pass;
    std::string witness;   // mandatory for failures, printable in DSL syntax
    int degree = -1;
};

struct Report {
    std::string title;
    std::vector<CheckItem> items;
    std::vector<std::string> assumption_flags;
    double seconds = 0.0;

    void add(const std::string& name, bool ok, const std::string& witness = "", int degree = -1);
    void add_unverified(const std::string& name, const std::string& note, int degree = -1);
    void merge(const Report& sub);
    bool pass() const;

    std::string text() const;
    std::string machine() const;   // versioned key-value tree, one line per entry
};

}  // namespace hopfgal
