#ifndef CCF_ERRORS_HPP
#define CCF_ERRORS_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace ccf {

// A pipeline stage found evidence that its input cannot stem from a chordal
// claw-free graph (non-tree edge criterion, impossible colors, bad intervals).
class StructureError : public std::runtime_error {
public:
    explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

class NotInClassError : public std::runtime_error {
public:
    enum class Reason { not_chordal, not_claw_free };

    NotInClassError(Reason r, std::optional<std::array<int, 4>> claw_witness = std::nullopt,
                    int input = 0)
        : std::runtime_error(describe(r, input)), reason(r), claw(claw_witness), input_index(input) {}

    Reason reason;
    std::optional<std::array<int, 4>> claw;  // center followed by three leaves
    int input_index;                         // which argument failed, for two-graph operations

private:
    static std::string describe(Reason r, int input) {
        std::string s = input == 0 ? "input" : "second input";
        s += r == Reason::not_chordal ? " is not chordal" : " is not claw-free";
        return s;
    }
};

class NotConnectedError : public std::runtime_error {
public:
    NotConnectedError() : std::runtime_error("graph is not connected") {}
};

}  // namespace ccf

#endif
