#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace atomfol {

/// The nine inferential dimensions of an Atomic if-then record.
enum class Dimension { xIntent, xReact, xNeed, xWant, xEffect, xAttr, oReact, oWant, oEffect };

enum class Category { MentalState, Event, Persona };

inline constexpr std::array<Dimension, 9> kAllDimensions = {
    Dimension::xIntent, Dimension::xReact, Dimension::xNeed,
    Dimension::xWant,   Dimension::xEffect, Dimension::xAttr,
    Dimension::oReact,  Dimension::oWant,   Dimension::oEffect};

inline constexpr std::array<Category, 3> kAllCategories = {
    Category::Persona, Category::MentalState, Category::Event};

inline constexpr std::string_view to_string(Dimension d) {
  switch (d) {
    case Dimension::xIntent: return "xIntent";
    case Dimension::xReact: return "xReact";
    case Dimension::xNeed: return "xNeed";
    case Dimension::xWant: return "xWant";
    case Dimension::xEffect: return "xEffect";
    case Dimension::xAttr: return "xAttr";
    case Dimension::oReact: return "oReact";
    case Dimension::oWant: return "oWant";
    case Dimension::oEffect: return "oEffect";
  }
  return "";
}

inline constexpr std::string_view to_string(Category c) {
  switch (c) {
    case Category::MentalState: return "Mental-State";
    case Category::Event: return "Event";
    case Category::Persona: return "Persona";
  }
  return "";
}

inline std::optional<Dimension> parse_dimension(std::string_view s) {
  for (Dimension d : kAllDimensions) {
    if (to_string(d) == s) return d;
  }
  return std::nullopt;
}

/// Accepts "Mental-State" and the shorthand "Mental".
inline std::optional<Category> parse_category(std::string_view s) {
  if (s == "Mental") return Category::MentalState;
  for (Category c : kAllCategories) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

inline constexpr Category category_of(Dimension d) {
  switch (d) {
    case Dimension::xIntent:
    case Dimension::xReact:
    case Dimension::oReact:
      return Category::MentalState;
    case Dimension::xAttr:
      return Category::Persona;
    default:
      return Category::Event;
  }
}

/// True for the x-dimensions, whose inference is about PersonX.
inline constexpr bool about_person_x(Dimension d) {
  switch (d) {
    case Dimension::oReact:
    case Dimension::oWant:
    case Dimension::oEffect:
      return false;
    default:
      return true;
  }
}

}  // namespace atomfol
