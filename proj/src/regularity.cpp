#include "hsg/regularity.hpp"

namespace hsg {

const char* to_string(TheoremTag t) {
  switch (t) {
    case TheoremTag::prop7: return "prop7";
    case TheoremTag::thm8: return "thm8";
    case TheoremTag::thm9: return "thm9";
    case TheoremTag::thm12_forward: return "thm12-forward";
    case TheoremTag::thm12_backward: return "thm12-backward";
    case TheoremTag::lemma11: return "lemma11";
    case TheoremTag::cor13: return "cor13";
    case TheoremTag::cor14: return "cor14";
  }
  return "?";
}

RegularityEvidence regularity_evidence(const Hypergroupoid& h) {
  detail::require_associative(h, "regularity_evidence");
  RegularityEvidence out;
  out.regular = true;
  const int n = h.order();
  out.element_chains.reserve(n);
  for (int x = 0; x < n; ++x) {
    Subset chain = detail::element_chain(h, x);
    out.element_chains.push_back(chain);
    if (!chain.contains(x) && !out.failing_element) {
      out.regular = false;
      out.failing_element = x;
    }
  }
  return out;
}

bool is_regular(const Hypergroupoid& h) {
  detail::require_associative(h, "is_regular");
  const int n = h.order();
  for (int x = 0; x < n; ++x) {
    if (!detail::element_chain(h, x).contains(x)) return false;
  }
  return true;
}

namespace {

// Ascending-mask sweep over all nonempty subsets.
template <typename F>
void for_each_nonempty(const Hypergroupoid& h, F&& f) {
  const std::uint16_t all = h.full_set().bits();
  for (std::uint16_t m = 1; m <= all; ++m) {
    f(Subset::from_bits(m));
  }
}

void require_regular(const Hypergroupoid& h, const char* what) {
  const int n = h.order();
  for (int x = 0; x < n; ++x) {
    if (!detail::element_chain(h, x).contains(x)) {
      throw precondition_error(std::string(what) +
                               ": structure is not regular, element " +
                               std::to_string(x) + " is outside its chain");
    }
  }
}

// Shared sweep behind the prop7 and thm9 checks. When `right_times_any` is
// true, pairs are (right ideal C, nonempty D); otherwise (nonempty C, left
// ideal D). Returns the first violating pair.
std::optional<VerificationWitness> prop7_violation(const Hypergroupoid& h,
                                                   bool right_times_any) {
  std::optional<VerificationWitness> found;
  for_each_nonempty(h, [&](Subset c) {
    if (found) return;
    if (right_times_any && !detail::right_ideal_unchecked(h, c)) return;
    for_each_nonempty(h, [&](Subset d) {
      if (found) return;
      if (!right_times_any && !detail::left_ideal_unchecked(h, d)) return;
      Subset prod = detail::product_unchecked(h, c, d);
      if (!detail::bi_ideal_unchecked(h, prod)) {
        found = VerificationWitness{
            h,
            {{"C", c}, {"D", d}, {"C*D", prod}},
            right_times_any ? "C*D is not a bi-ideal (C a right ideal)"
                            : "C*D is not a bi-ideal (D a left ideal)"};
      }
    });
  });
  return found;
}

}  // namespace

VerificationReport verify_proposition7(const Hypergroupoid& h) {
  detail::require_associative(h, "verify_proposition7");
  auto w = prop7_violation(h, true);
  if (!w) w = prop7_violation(h, false);
  return VerificationReport{TheoremTag::prop7, !w.has_value(),
                            w ? "violated" : "holds", std::move(w)};
}

VerificationReport verify_theorem8(const Hypergroupoid& h) {
  detail::require_associative(h, "verify_theorem8");
  require_regular(h, "verify_theorem8");
  std::optional<VerificationWitness> found;
  Subset full = h.full_set();
  for_each_nonempty(h, [&](Subset b) {
    if (found || !detail::bi_ideal_unchecked(h, b)) return;
    GeneratedIdeals gen = detail::generated_ideals_unchecked(h, b);
    Subset prod = detail::product_unchecked(h, gen.right, gen.left);
    Subset bhb = detail::product_unchecked(
        h, detail::product_unchecked(h, b, full), b);
    Subset bb = detail::product_unchecked(h, b, b);
    if (prod != b) {
      found = VerificationWitness{
          h,
          {{"B", b}, {"R(B)", gen.right}, {"L(B)", gen.left},
           {"R(B)*L(B)", prod}},
          "bi-ideal is not the product of its generated ideals"};
    } else if (bhb != b) {
      found = VerificationWitness{
          h, {{"B", b}, {"B*H*B", bhb}}, "proof identity B = B*H*B fails"};
    } else if (!bb.subset_of(b)) {
      found = VerificationWitness{
          h, {{"B", b}, {"B*B", bb}}, "proof identity B*B in B fails"};
    }
  });
  return VerificationReport{TheoremTag::thm8, !found.has_value(),
                            found ? "violated" : "holds", std::move(found)};
}

VerificationReport verify_theorem9(const Hypergroupoid& h) {
  detail::require_associative(h, "verify_theorem9");
  require_regular(h, "verify_theorem9");

  // Backward direction: right ideal times left ideal gives a bi-ideal.
  std::optional<VerificationWitness> backward;
  for_each_nonempty(h, [&](Subset c) {
    if (backward || !detail::right_ideal_unchecked(h, c)) return;
    for_each_nonempty(h, [&](Subset d) {
      if (backward || !detail::left_ideal_unchecked(h, d)) return;
      Subset prod = detail::product_unchecked(h, c, d);
      if (!detail::bi_ideal_unchecked(h, prod)) {
        backward = VerificationWitness{
            h,
            {{"C", c}, {"D", d}, {"C*D", prod}},
            "right ideal * left ideal is not a bi-ideal"};
      }
    });
  });

  VerificationReport forward = verify_theorem8(h);
  bool holds = forward.holds && !backward;
  std::string detail = std::string("forward ") +
                       (forward.holds ? "holds" : "violated") + "; backward " +
                       (backward ? "violated" : "holds");
  std::optional<VerificationWitness> witness = std::move(forward.witness);
  if (!witness) witness = std::move(backward);
  return VerificationReport{TheoremTag::thm9, holds, std::move(detail),
                            std::move(witness)};
}

std::pair<VerificationReport, VerificationReport> verify_theorem12(
    const Hypergroupoid& h) {
  detail::require_associative(h, "verify_theorem12");

  const int n = h.order();
  bool lhs = true;
  for (int x = 0; x < n && lhs; ++x) {
    lhs = detail::element_chain(h, x).contains(x);
  }

  // RHS, computed without assuming the theorem: idempotence of one-sided
  // ideals plus quasi-ideality of their products.
  bool rhs = true;
  std::optional<VerificationWitness> rhs_witness;
  for_each_nonempty(h, [&](Subset a) {
    if (!rhs) return;
    bool r = detail::right_ideal_unchecked(h, a);
    bool l = detail::left_ideal_unchecked(h, a);
    if ((r || l) && !detail::idempotent_unchecked(h, a)) {
      rhs = false;
      rhs_witness = VerificationWitness{
          h,
          {{r ? "A" : "B", a},
           {r ? "A*A" : "B*B", detail::product_unchecked(h, a, a)}},
          r ? "right ideal is not idempotent" : "left ideal is not idempotent"};
    }
  });
  if (rhs) {
    for_each_nonempty(h, [&](Subset a) {
      if (!rhs || !detail::right_ideal_unchecked(h, a)) return;
      for_each_nonempty(h, [&](Subset b) {
        if (!rhs || !detail::left_ideal_unchecked(h, b)) return;
        Subset prod = detail::product_unchecked(h, a, b);
        if (!detail::quasi_ideal_unchecked(h, prod)) {
          rhs = false;
          rhs_witness = VerificationWitness{
              h,
              {{"A", a}, {"B", b}, {"A*B", prod}},
              "A*B is not a quasi-ideal"};
        }
      });
    });
  }

  // Proof identity on regular tables: A*B = A n B for right A, left B.
  std::optional<VerificationWitness> identity_witness;
  if (lhs) {
    for_each_nonempty(h, [&](Subset a) {
      if (identity_witness || !detail::right_ideal_unchecked(h, a)) return;
      for_each_nonempty(h, [&](Subset b) {
        if (identity_witness || !detail::left_ideal_unchecked(h, b)) return;
        Subset prod = detail::product_unchecked(h, a, b);
        if (prod != (a & b)) {
          identity_witness = VerificationWitness{
              h,
              {{"A", a}, {"B", b}, {"A*B", prod}, {"A&B", a & b}},
              "proof identity A*B = A n B fails on a regular table"};
        }
      });
    });
  }

  bool forward_holds = !lhs || (rhs && !identity_witness);
  std::optional<VerificationWitness> forward_witness;
  if (!forward_holds) {
    forward_witness = identity_witness ? identity_witness : rhs_witness;
  }
  VerificationReport forward{
      TheoremTag::thm12_forward, forward_holds,
      std::string("lhs ") + (lhs ? "true" : "false") + ", rhs " +
          (rhs ? "true" : "false"),
      std::move(forward_witness)};

  bool backward_holds = !rhs || lhs;
  std::optional<VerificationWitness> backward_witness;
  if (!backward_holds) {
    backward_witness = VerificationWitness{
        h, {}, "ideals idempotent and products quasi, but not regular"};
  }
  VerificationReport backward{
      TheoremTag::thm12_backward, backward_holds,
      std::string("lhs ") + (lhs ? "true" : "false") + ", rhs " +
          (rhs ? "true" : "false"),
      std::move(backward_witness)};

  return {std::move(forward), std::move(backward)};
}

VerificationReport verify_lemma11(const Hypergroupoid& h) {
  std::optional<VerificationWitness> found;
  for_each_nonempty(h, [&](Subset a) {
    if (found || !detail::right_ideal_unchecked(h, a)) return;
    for_each_nonempty(h, [&](Subset b) {
      if (found || !detail::left_ideal_unchecked(h, b)) return;
      Subset meet = a & b;
      if (meet.empty()) {
        found = VerificationWitness{
            h, {{"A", a}, {"B", b}}, "A n B is empty"};
        return;
      }
      for (int x : a) {
        for (int y : b) {
          if (!h.cell(x, y).subset_of(meet)) {
            found = VerificationWitness{
                h,
                {{"A", a}, {"B", b}, {"cell", h.cell(x, y)}},
                "cell (" + std::to_string(x) + "," + std::to_string(y) +
                    ") escapes A n B"};
            return;
          }
        }
      }
    });
  });
  return VerificationReport{TheoremTag::lemma11, !found.has_value(),
                            found ? "violated" : "holds", std::move(found)};
}

namespace {

ClassicalSemigroup require_classical(const Hypergroupoid& h,
                                     const char* what) {
  auto s = as_semigroup(h);
  if (!s) {
    throw precondition_error(std::string(what) +
                             ": table has non-singleton cells, no classical "
                             "semigroup bridge");
  }
  if (!s->associative()) {
    throw precondition_error(std::string(what) +
                             ": classical table is not associative");
  }
  return *s;
}

}  // namespace

VerificationReport verify_corollary13(const Hypergroupoid& h) {
  ClassicalSemigroup s = require_classical(h, "verify_corollary13");
  if (!s.is_regular()) {
    throw precondition_error(
        "verify_corollary13: classical semigroup is not regular");
  }
  const std::uint16_t all = Subset::full(s.order()).bits();
  std::optional<VerificationWitness> found;
  for (std::uint16_t m = 1; m <= all && !found; ++m) {
    Subset b = Subset::from_bits(m);
    if (!s.is_bi_ideal(b)) continue;
    Subset prod = s.set_product(s.right_generated(b), s.left_generated(b));
    if (prod != b) {
      found = VerificationWitness{
          h,
          {{"B", b}, {"R(B)L(B)", prod}},
          "classical bi-ideal is not the product of its generated ideals"};
    }
  }
  for (std::uint16_t mc = 1; mc <= all && !found; ++mc) {
    Subset c = Subset::from_bits(mc);
    if (!s.is_right_ideal(c)) continue;
    for (std::uint16_t md = 1; md <= all && !found; ++md) {
      Subset d = Subset::from_bits(md);
      if (!s.is_left_ideal(d)) continue;
      Subset prod = s.set_product(c, d);
      if (!s.is_bi_ideal(prod)) {
        found = VerificationWitness{
            h,
            {{"C", c}, {"D", d}, {"CD", prod}},
            "classical right*left product is not a bi-ideal"};
      }
    }
  }
  return VerificationReport{TheoremTag::cor13, !found.has_value(),
                            found ? "violated" : "holds", std::move(found)};
}

VerificationReport verify_corollary14(const Hypergroupoid& h) {
  ClassicalSemigroup s = require_classical(h, "verify_corollary14");
  const std::uint16_t all = Subset::full(s.order()).bits();

  bool lhs = s.is_regular();
  bool rhs = true;
  std::optional<VerificationWitness> rhs_witness;
  for (std::uint16_t m = 1; m <= all && rhs; ++m) {
    Subset a = Subset::from_bits(m);
    bool r = s.is_right_ideal(a);
    bool l = s.is_left_ideal(a);
    if ((r || l) && !s.is_idempotent(a)) {
      rhs = false;
      rhs_witness = VerificationWitness{
          h, {{"A", a}}, "one-sided classical ideal is not idempotent"};
    }
  }
  for (std::uint16_t ma = 1; ma <= all && rhs; ++ma) {
    Subset a = Subset::from_bits(ma);
    if (!s.is_right_ideal(a)) continue;
    for (std::uint16_t mb = 1; mb <= all && rhs; ++mb) {
      Subset b = Subset::from_bits(mb);
      if (!s.is_left_ideal(b)) continue;
      if (!s.is_quasi_ideal(s.set_product(a, b))) {
        rhs = false;
        rhs_witness = VerificationWitness{
            h, {{"A", a}, {"B", b}}, "classical AB is not a quasi-ideal"};
      }
    }
  }

  bool holds = lhs == rhs;
  std::string detail = std::string("lhs ") + (lhs ? "true" : "false") +
                       ", rhs " + (rhs ? "true" : "false");
  std::optional<VerificationWitness> witness;
  if (!holds) {
    witness = rhs_witness ? std::move(rhs_witness)
                          : VerificationWitness{
                                h,
                                {},
                                "ideals idempotent and products quasi, but "
                                "the semigroup is not regular"};
  }
  return VerificationReport{TheoremTag::cor14, holds, std::move(detail),
                            std::move(witness)};
}

}  // namespace hsg
