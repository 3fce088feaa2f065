#pragma once

#include <json.hpp>

#include "liehr/classify.hpp"

namespace liehr {

// Fixture suites reproducing the published tables exactly.  Suites:
//   theorem1, table36, exceptional-rs, quaternionic-s, diophantine, all
struct VerifyCheck {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;

    bool all_pass() const;
    std::string to_text() const;  // one line per check plus a summary
    nlohmann::ordered_json to_json() const;
};

// Unknown suite name -> domain_error.  Catalog problems surface as data_error.
VerifyReport run_verify(const std::string& suite);
VerifyReport run_verify(const std::string& suite, const Catalog& cat);

}  // namespace liehr
