#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace qtau {

// Sector order is the canonical generator priority.
enum class Sector : std::uint8_t {
    Xi = 0,
    XiBar = 1,
    Theta = 2,
    Lambda = 3,
    Chi = 4,
    GAbstract = 5,
    Time = 6,
    TimeBar = 7,
    Miwa = 8,
    GEntry = 9,
};

class Symbol {
public:
    constexpr Symbol() = default;
    constexpr Symbol(Sector s, int i, int j = 0, int copy = 0)
        : code_((static_cast<std::uint32_t>(s) << 24) | (static_cast<std::uint32_t>(copy) << 20) |
                (static_cast<std::uint32_t>(i) << 10) | static_cast<std::uint32_t>(j)) {}

    constexpr Sector sector() const { return static_cast<Sector>(code_ >> 24); }
    constexpr int copy() const { return static_cast<int>((code_ >> 20) & 0xF); }
    constexpr int i() const { return static_cast<int>((code_ >> 10) & 0x3FF); }
    constexpr int j() const { return static_cast<int>(code_ & 0x3FF); }
    constexpr std::uint32_t code() const { return code_; }

    constexpr auto operator<=>(const Symbol&) const = default;

    std::string name() const {
        std::string base;
        switch (sector()) {
            case Sector::Xi: base = "xi" + std::to_string(i()); break;
            case Sector::XiBar: base = "xb" + std::to_string(i()); break;
            case Sector::Theta: base = "th" + std::to_string(i()); break;
            case Sector::Lambda: base = "L" + std::to_string(i()); break;
            case Sector::Chi: base = "ch" + std::to_string(i()); break;
            case Sector::GAbstract: base = "G" + std::to_string(i()) + std::to_string(j()); break;
            case Sector::Time: base = "t" + std::to_string(i()); break;
            case Sector::TimeBar: base = "tb" + std::to_string(i()); break;
            case Sector::Miwa: base = "lam" + std::to_string(i()); break;
            case Sector::GEntry: base = "g" + std::to_string(i()) + std::to_string(j()); break;
        }
        for (int c = 0; c < copy(); ++c) base += "'";
        return base;
    }

private:
    std::uint32_t code_ = 0;
};

inline constexpr Symbol xi(int i, int copy = 0) { return {Sector::Xi, i, 0, copy}; }
inline constexpr Symbol xibar(int i, int copy = 0) { return {Sector::XiBar, i, 0, copy}; }
inline constexpr Symbol theta(int s) { return {Sector::Theta, s}; }
inline constexpr Symbol lambda_d(int j) { return {Sector::Lambda, j}; }
inline constexpr Symbol chi(int s) { return {Sector::Chi, s}; }
inline constexpr Symbol g_abstract(int i, int j) { return {Sector::GAbstract, i, j}; }
inline constexpr Symbol time_var(int k, int copy = 0) { return {Sector::Time, k, 0, copy}; }
inline constexpr Symbol time_bar(int k, int copy = 0) { return {Sector::TimeBar, k, 0, copy}; }
inline constexpr Symbol miwa(int a, int copy = 0) { return {Sector::Miwa, a, 0, copy}; }
inline constexpr Symbol g_entry(int i, int j) { return {Sector::GEntry, i, j}; }

}  // namespace qtau
