#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace axmul {

// Gate library available to node genes. Areas are kept in hundredths of a
// square micrometer so that circuit areas sum exactly in integers.
enum class Gate : std::uint8_t { INV = 0, AND, OR, XOR, NAND, NOR, XNOR };

inline constexpr int kGateCount = 7;

inline constexpr std::array<std::uint32_t, kGateCount> kGateAreaCenti = {
    140, 234, 234, 469, 187, 234, 469};

inline constexpr std::array<std::string_view, kGateCount> kGateName = {
    "INV", "AND", "OR", "XOR", "NAND", "NOR", "XNOR"};

constexpr std::uint32_t gate_area_centi(Gate g) {
  return kGateAreaCenti[static_cast<int>(g)];
}

constexpr double gate_area(Gate g) { return gate_area_centi(g) / 100.0; }

// INV reads only its first input; the second input gene is carried anyway so
// every node keeps the same three-gene encoding.
constexpr bool is_single_input(Gate g) { return g == Gate::INV; }

constexpr std::uint64_t eval_gate(Gate g, std::uint64_t a, std::uint64_t b) {
  switch (g) {
    case Gate::INV: return ~a;
    case Gate::AND: return a & b;
    case Gate::OR: return a | b;
    case Gate::XOR: return a ^ b;
    case Gate::NAND: return ~(a & b);
    case Gate::NOR: return ~(a | b);
    case Gate::XNOR: return ~(a ^ b);
  }
  return 0;
}

}  // namespace axmul
