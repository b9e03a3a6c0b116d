#pragma once

/// Runtime values of the script language.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "closure_lab/detectors.hpp"

namespace closure_lab::script {

struct FieldLit {
  std::string text;  // "Q", "K" or "GF(p)"
  std::uint32_t prime = 0;
};

template <CoefficientField F>
struct PolyValue {
  RingPtr<F> ring;
  Polynomial<F> value;
};

template <CoefficientField F>
struct SeqValue {
  RingPtr<F> ring;
  std::vector<Polynomial<F>> items;
};

template <CoefficientField F>
struct Value;

template <CoefficientField F>
struct ListValue {
  std::vector<Value<F>> items;
};

template <CoefficientField F>
struct Value {
  std::variant<long long, bool, std::string, FieldLit, RingPtr<F>, Ideal<F>, PolyValue<F>, SeqValue<F>, ListValue<F>,
               Report>
      data;
  // extra computed data shown when the value is reported
  std::vector<std::pair<std::string, Quantity>> diagnostics;

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(data);
  }
  template <class T>
  const T* get() const {
    return std::get_if<T>(&data);
  }
};

template <CoefficientField F>
std::string type_name(const Value<F>& v) {
  static const char* names[] = {"integer", "boolean", "string", "field", "ring",
                                "ideal",   "element", "sequence", "list", "report"};
  return names[v.data.index()];
}

template <CoefficientField F>
std::string show(const Value<F>& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, long long>) return std::to_string(x);
        if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        if constexpr (std::is_same_v<T, std::string>) return x;
        if constexpr (std::is_same_v<T, FieldLit>) return x.text;
        if constexpr (std::is_same_v<T, RingPtr<F>>) return x->describe();
        if constexpr (std::is_same_v<T, Ideal<F>>) return x.to_string();
        if constexpr (std::is_same_v<T, PolyValue<F>>) return x.value.to_string();
        if constexpr (std::is_same_v<T, SeqValue<F>>) return closure_lab::detail::describe_sequence(x.items);
        if constexpr (std::is_same_v<T, ListValue<F>>) {
          std::string out = "[";
          for (std::size_t i = 0; i < x.items.size(); ++i) out += (i ? ", " : "") + show(x.items[i]);
          return out + "]";
        }
        if constexpr (std::is_same_v<T, Report>) return x.check + ": " + to_string(x.verdict);
      },
      v.data);
}

template <CoefficientField F>
Quantity to_quantity(const Value<F>& v) {
  if (const auto* i = v.template get<long long>()) return *i;
  if (const auto* b = v.template get<bool>()) return *b;
  return show(v);
}

}  // namespace closure_lab::script
