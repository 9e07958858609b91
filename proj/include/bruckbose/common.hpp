#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace bruckbose {

// Field element code. GF(q) elements are the codes < q, GF(q^3) elements the
// codes < q^3 (see gf.hpp for the encoding).
using Fel = std::uint16_t;

// Closed-form counts exceed 64 bits for q >= 9, so they are carried as 128-bit
// integers and serialised as decimal strings.
using BigCount = unsigned __int128;

std::string to_string(BigCount v);

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller violated a documented precondition (bad arguments, mixed ambient
// spaces, unknown names...).
struct PreconditionError : Error {
    using Error::Error;
};

// An internal invariant that cannot fail on valid inputs did fail.
struct InternalError : Error {
    using Error::Error;
};

// A requested computation is outside the supported budget (e.g. full
// enumeration at too large a q). Maps to CLI exit code 2.
struct Refusal : Error {
    using Error::Error;
};

// A structural claim that the verifier checks did not hold. Carries the
// counterexample payload that ends up in the failing certificate.
struct TheoremViolation : Error {
    nlohmann::json payload;
    TheoremViolation(const std::string& what, nlohmann::json p)
        : Error(what), payload(std::move(p)) {}
};

// Result of a verification pass: pass/fail plus structured details, with the
// counterexample stored under details["counterexample"] on failure.
struct CheckOutcome {
    bool pass = true;
    nlohmann::json details = nlohmann::json::object();

    void fail(nlohmann::json counterexample) {
        pass = false;
        if (!details.contains("counterexample"))
            details["counterexample"] = std::move(counterexample);
    }
};

inline std::string to_string(BigCount v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    return {s.rbegin(), s.rend()};
}

}  // namespace bruckbose
