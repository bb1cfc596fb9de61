#include "omega/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "omega/errors.hpp"

namespace omega {

std::uint64_t cantor_pair(std::uint64_t i, std::uint64_t j) {
  std::uint64_t w = i + j;
  return w * (w + 1) / 2 + j;
}

namespace {

std::uint64_t triangle_root(std::uint64_t n) {
  // Largest w with w(w+1)/2 <= n.
  std::uint64_t w = static_cast<std::uint64_t>(
      (std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0);
  while (w * (w + 1) / 2 > n) --w;
  while ((w + 1) * (w + 2) / 2 <= n) ++w;
  return w;
}

}  // namespace

std::uint64_t cantor_first(std::uint64_t n) {
  std::uint64_t w = triangle_root(n);
  std::uint64_t j = n - w * (w + 1) / 2;
  return w - j;
}

std::uint64_t cantor_second(std::uint64_t n) {
  std::uint64_t w = triangle_root(n);
  return n - w * (w + 1) / 2;
}

namespace {

using Caps = Transformation::Capabilities;
using u64 = std::uint64_t;

const ExtNat kInf = ExtNat::infinity();

Caps injective_caps(std::function<bool(u64)> in_image,
                    std::function<u64(u64)> complement) {
  Caps c;
  c.ker_rep = [](u64 n) { return n; };
  c.fiber_size = [](u64) { return ExtNat(1); };
  c.transversal = [](u64 i) { return i; };
  c.transversal_member = [](u64) { return true; };
  c.in_image = std::move(in_image);
  c.image_complement = std::move(complement);
  return c;
}

std::function<u64(u64)> empty_complement(const std::string& id) {
  return [id](u64) -> u64 {
    throw ImageExhausted(id + " is surjective");
  };
}

std::function<u64(u64)> finite_complement(std::vector<u64> elems,
                                          const std::string& id) {
  return [elems = std::move(elems), id](u64 i) -> u64 {
    if (i >= elems.size())
      throw ImageExhausted(id + ": image complement has " +
                           std::to_string(elems.size()) + " elements");
    return elems[i];
  };
}

std::vector<Transformation> make_catalog() {
  std::vector<Transformation> out;
  auto add = [&](Transformation t) { out.push_back(std::move(t)); };

  // --- the twelve mandatory witnesses ---

  add(Transformation(
      "id", "identity map", [](u64 n) { return n; },
      CertifiedProfile::formula(0, 0, 0, "identity"),
      injective_caps([](u64) { return true; }, empty_complement("id"))));

  add(Transformation(
      "succ", "n -> n+1", [](u64 n) { return n + 1; },
      CertifiedProfile::formula(0, 1, 0, "injective, misses 0"),
      injective_caps([](u64 m) { return m >= 1; },
                     finite_complement({0}, "succ"))));

  add(Transformation(
      "double", "n -> 2n", [](u64 n) { return 2 * n; },
      CertifiedProfile::formula(0, kInf, 0, "injective onto the evens"),
      injective_caps([](u64 m) { return m % 2 == 0; },
                     [](u64 i) { return 2 * i + 1; })));

  {
    Caps c;
    c.ker_rep = [](u64 n) { return n <= 1 ? 0 : n; };
    c.fiber_size = [](u64 n) { return ExtNat(n <= 1 ? 2 : 1); };
    c.in_image = [](u64) { return true; };
    c.image_complement = empty_complement("pred");
    c.transversal = [](u64 i) { return i == 0 ? 0 : i + 1; };
    c.transversal_member = [](u64 n) { return n != 1; };
    add(Transformation(
        "pred", "n -> max(n-1, 0)", [](u64 n) { return n == 0 ? 0 : n - 1; },
        CertifiedProfile::formula(1, 0, 0, "collapses {0,1}, surjective"),
        c));
  }

  {
    Caps c;
    c.ker_rep = [](u64 n) { return n <= 1 ? 0 : n; };
    c.fiber_size = [](u64 n) { return ExtNat(n <= 1 ? 2 : 1); };
    c.in_image = [](u64 m) { return m >= 1; };
    c.image_complement = finite_complement({0}, "merge01");
    c.transversal = [](u64 i) { return i == 0 ? 0 : i + 1; };
    c.transversal_member = [](u64 n) { return n != 1; };
    add(Transformation(
        "merge01", "0,1 -> 1; n -> n otherwise",
        [](u64 n) { return n <= 1 ? 1 : n; },
        CertifiedProfile::formula(1, 1, 0, "collapses {0,1}, misses 0"), c));
  }

  {
    Caps c;
    c.ker_rep = [](u64 n) { return n <= 1 ? 0 : n; };
    c.fiber_size = [](u64 n) { return ExtNat(n <= 1 ? 2 : 1); };
    c.in_image = [](u64 m) { return m == 0 || (m % 2 == 0 && m >= 4); };
    c.image_complement = [](u64 i) -> u64 {
      if (i < 3) return i + 1;       // 1, 2, 3
      return 2 * i - 1;              // 5, 7, 9, ...
    };
    c.transversal = [](u64 i) { return i == 0 ? 0 : i + 1; };
    c.transversal_member = [](u64 n) { return n != 1; };
    add(Transformation(
        "merge01_double", "0,1 -> 0; n -> 2n otherwise",
        [](u64 n) { return n <= 1 ? 0 : 2 * n; },
        CertifiedProfile::formula(1, kInf, 0,
                                  "collapses {0,1}, image {0} plus evens "
                                  "from 4"),
        c));
  }

  {
    Caps c;
    c.ker_rep = [](u64 n) { return n & ~u64{1}; };
    c.fiber_size = [](u64) { return ExtNat(2); };
    c.in_image = [](u64) { return true; };
    c.image_complement = empty_complement("halve");
    c.transversal = [](u64 i) { return 2 * i; };
    c.transversal_member = [](u64 n) { return n % 2 == 0; };
    add(Transformation(
        "halve", "n -> floor(n/2)", [](u64 n) { return n / 2; },
        CertifiedProfile::formula(kInf, 0, 0, "pairs collapse, surjective"),
        c));
  }

  {
    Caps c;
    c.ker_rep = [](u64 n) { return n & ~u64{1}; };
    c.fiber_size = [](u64) { return ExtNat(2); };
    c.in_image = [](u64 m) { return m >= 1; };
    c.image_complement = finite_complement({0}, "halve_shift");
    c.transversal = [](u64 i) { return 2 * i; };
    c.transversal_member = [](u64 n) { return n % 2 == 0; };
    add(Transformation(
        "halve_shift", "n -> floor(n/2)+1", [](u64 n) { return n / 2 + 1; },
        CertifiedProfile::formula(kInf, 1, 0, "pairs collapse, misses 0"),
        c));
  }

  {
    Caps c;
    c.ker_rep = [](u64 n) { return n & ~u64{1}; };
    c.fiber_size = [](u64) { return ExtNat(2); };
    c.in_image = [](u64 m) { return m % 4 == 0; };
    c.image_complement = [](u64 i) { return 4 * (i / 3) + i % 3 + 1; };
    c.transversal = [](u64 i) { return 2 * i; };
    c.transversal_member = [](u64 n) { return n % 2 == 0; };
    add(Transformation(
        "stride4", "n -> 4*floor(n/2)", [](u64 n) { return 4 * (n / 2); },
        CertifiedProfile::formula(kInf, kInf, 0,
                                  "pairs collapse onto multiples of 4"),
        c));
  }

  {
    Caps c;
    c.ker_rep = [](u64 n) { return cantor_pair(cantor_first(n), 0); };
    c.fiber_size = [](u64) { return kInf; };
    c.in_image = [](u64) { return true; };
    c.image_complement = empty_complement("cproj");
    c.transversal = [](u64 i) { return cantor_pair(i, 0); };
    c.transversal_member = [](u64 n) { return cantor_second(n) == 0; };
    c.fat_class_member = [](u64 i, u64 j) { return cantor_pair(i, j); };
    c.fat_image_index = [](u64 m) { return std::optional<u64>(m); };
    add(Transformation(
        "cproj", "Cantor first-coordinate projection",
        [](u64 n) { return cantor_first(n); },
        CertifiedProfile::formula(kInf, 0, kInf,
                                  "every fiber is an infinite pairing row"),
        c));
  }

  {
    Caps c;
    c.ker_rep = [](u64 n) { return cantor_pair(cantor_first(n), 0); };
    c.fiber_size = [](u64) { return kInf; };
    c.in_image = [](u64 m) { return m >= 1; };
    c.image_complement = finite_complement({0}, "cproj_shift");
    c.transversal = [](u64 i) { return cantor_pair(i, 0); };
    c.transversal_member = [](u64 n) { return cantor_second(n) == 0; };
    c.fat_class_member = [](u64 i, u64 j) { return cantor_pair(i, j); };
    c.fat_image_index = [](u64 m) {
      return m >= 1 ? std::optional<u64>(m - 1) : std::nullopt;
    };
    add(Transformation(
        "cproj_shift", "Cantor projection plus one",
        [](u64 n) { return cantor_first(n) + 1; },
        CertifiedProfile::formula(kInf, 1, kInf, "cproj shifted off 0"), c));
  }

  {
    Caps c;
    c.ker_rep = [](u64 n) { return cantor_pair(cantor_first(n), 0); };
    c.fiber_size = [](u64) { return kInf; };
    c.in_image = [](u64 m) { return m % 2 == 0; };
    c.image_complement = [](u64 i) { return 2 * i + 1; };
    c.transversal = [](u64 i) { return cantor_pair(i, 0); };
    c.transversal_member = [](u64 n) { return cantor_second(n) == 0; };
    c.fat_class_member = [](u64 i, u64 j) { return cantor_pair(i, j); };
    c.fat_image_index = [](u64 m) {
      return m % 2 == 0 ? std::optional<u64>(m / 2) : std::nullopt;
    };
    add(Transformation(
        "cproj_double", "doubled Cantor projection",
        [](u64 n) { return 2 * cantor_first(n); },
        CertifiedProfile::formula(kInf, kInf, kInf,
                                  "cproj onto the evens"),
        c));
  }

  // --- auxiliary variants ---

  add(Transformation(
      "succ2", "n -> n+2", [](u64 n) { return n + 2; },
      CertifiedProfile::formula(0, 2, 0, "injective, misses {0,1}"),
      injective_caps([](u64 m) { return m >= 2; },
                     finite_complement({0, 1}, "succ2"))));

  add(Transformation(
      "succ0", "0 -> 0; n -> n+1 otherwise",
      [](u64 n) { return n == 0 ? 0 : n + 1; },
      CertifiedProfile::formula(0, 1, 0, "injective, misses 1"),
      injective_caps([](u64 m) { return m != 1; },
                     finite_complement({1}, "succ0"))));

  add(Transformation(
      "quad", "n -> 4n", [](u64 n) { return 4 * n; },
      CertifiedProfile::formula(0, kInf, 0, "injective onto multiples of 4"),
      injective_caps([](u64 m) { return m % 4 == 0; },
                     [](u64 i) { return 4 * (i / 3) + i % 3 + 1; })));

  add(Transformation(
      "oddmap", "n -> 2n+1", [](u64 n) { return 2 * n + 1; },
      CertifiedProfile::formula(0, kInf, 0, "injective onto the odds"),
      injective_caps([](u64 m) { return m % 2 == 1; },
                     [](u64 i) { return 2 * i; })));

  add(Transformation(
      "oddmap0", "0 -> 0; n -> 2n-1 otherwise",
      [](u64 n) { return n == 0 ? 0 : 2 * n - 1; },
      CertifiedProfile::formula(0, kInf, 0, "injective onto {0} and odds"),
      injective_caps([](u64 m) { return m == 0 || m % 2 == 1; },
                     [](u64 i) { return 2 * i + 2; })));

  add(Transformation(
      "e1", "0 -> 0; 1 -> 1; n -> 2(n-1) otherwise",
      [](u64 n) { return n <= 1 ? n : 2 * (n - 1); },
      CertifiedProfile::formula(0, kInf, 0,
                                "injective onto the evens plus {1}"),
      injective_caps([](u64 m) { return m == 1 || m % 2 == 0; },
                     [](u64 i) { return 2 * i + 3; })));

  add(Transformation(
      "evens4", "0 -> 0; n -> 2n+2 otherwise",
      [](u64 n) { return n == 0 ? 0 : 2 * n + 2; },
      CertifiedProfile::formula(0, kInf, 0,
                                "injective onto {0} and evens from 4"),
      injective_caps(
          [](u64 m) { return m == 0 || (m % 2 == 0 && m >= 4); },
          [](u64 i) -> u64 {
            if (i < 3) return i + 1;  // 1, 2, 3
            return 2 * i - 1;         // 5, 7, ...
          })));

  {
    Caps c;
    c.ker_rep = [](u64 n) { return n <= 2 ? 0 : n; };
    c.fiber_size = [](u64 n) { return ExtNat(n <= 2 ? 3 : 1); };
    c.in_image = [](u64) { return true; };
    c.image_complement = empty_complement("pred2");
    c.transversal = [](u64 i) { return i == 0 ? 0 : i + 2; };
    c.transversal_member = [](u64 n) { return n == 0 || n >= 3; };
    add(Transformation(
        "pred2", "n -> max(n-2, 0)", [](u64 n) { return n <= 2 ? 0 : n - 2; },
        CertifiedProfile::formula(2, 0, 0, "collapses {0,1,2}, surjective"),
        c));
  }

  {
    Caps c;
    c.ker_rep = [](u64 n) { return n <= 2 ? 0 : n; };
    c.fiber_size = [](u64 n) { return ExtNat(n <= 2 ? 3 : 1); };
    c.in_image = [](u64 m) { return m >= 1; };
    c.image_complement = finite_complement({0}, "merge012");
    c.transversal = [](u64 i) { return i == 0 ? 0 : i + 2; };
    c.transversal_member = [](u64 n) { return n == 0 || n >= 3; };
    add(Transformation(
        "merge012", "0,1,2 -> 1; n -> n-1 otherwise",
        [](u64 n) { return n <= 2 ? 1 : n - 1; },
        CertifiedProfile::formula(2, 1, 0, "collapses {0,1,2}, misses 0"),
        c));
  }

  {
    Caps c;
    c.ker_rep = [](u64 n) { return (n == 2 || n == 3) ? 2 : n; };
    c.fiber_size = [](u64 n) { return ExtNat((n == 2 || n == 3) ? 2 : 1); };
    c.in_image = [](u64 m) { return m != 2; };
    c.image_complement = finite_complement({2}, "merge23s");
    c.transversal = [](u64 i) { return i < 3 ? i : i + 1; };
    c.transversal_member = [](u64 n) { return n != 3; };
    add(Transformation(
        "merge23s", "2,3 -> 3; n -> n otherwise",
        [](u64 n) { return (n == 2 || n == 3) ? 3 : n; },
        CertifiedProfile::formula(1, 1, 0, "collapses {2,3}, misses 2"), c));
  }

  {
    Caps c;
    c.ker_rep = [](u64 n) { return 4 * (n / 4); };
    c.fiber_size = [](u64) { return ExtNat(4); };
    c.in_image = [](u64) { return true; };
    c.image_complement = empty_complement("quarter");
    c.transversal = [](u64 i) { return 4 * i; };
    c.transversal_member = [](u64 n) { return n % 4 == 0; };
    add(Transformation(
        "quarter", "n -> floor(n/4)", [](u64 n) { return n / 4; },
        CertifiedProfile::formula(kInf, 0, 0, "4-blocks collapse"), c));
  }

  {
    Caps c;
    c.ker_rep = [](u64 n) { return n == 0 ? 0 : (n % 2 == 1 ? n : n - 1); };
    c.fiber_size = [](u64 n) { return ExtNat(n == 0 ? 1 : 2); };
    c.in_image = [](u64) { return true; };
    c.image_complement = empty_complement("halve_up");
    c.transversal = [](u64 i) { return i == 0 ? 0 : 2 * i - 1; };
    c.transversal_member = [](u64 n) { return n == 0 || n % 2 == 1; };
    add(Transformation(
        "halve_up", "n -> ceil(n/2)", [](u64 n) { return (n + 1) / 2; },
        CertifiedProfile::formula(kInf, 0, 0,
                                  "collapses {2m-1,2m}, surjective"),
        c));
  }

  {
    // fold: 2x -> x, odd -> odd.  Kernel classes are {v, 2v} for odd v and
    // singletons {4m}.
    Caps c;
    c.ker_rep = [](u64 n) {
      if (n % 2 == 1) return n;
      u64 x = n / 2;
      return x % 2 == 1 ? x : n;
    };
    c.fiber_size = [](u64 n) {
      if (n % 2 == 1) return ExtNat(2);
      return ExtNat((n / 2) % 2 == 1 ? 2 : 1);
    };
    c.in_image = [](u64) { return true; };
    c.image_complement = empty_complement("fold");
    c.transversal = [](u64 i) {
      static const u64 offs[3] = {0, 1, 3};
      return 4 * (i / 3) + offs[i % 3];
    };
    c.transversal_member = [](u64 n) { return n % 2 == 1 || n % 4 == 0; };
    add(Transformation(
        "fold", "2x -> x; odd -> odd",
        [](u64 n) { return n % 2 == 0 ? n / 2 : n; },
        CertifiedProfile::formula(kInf, 0, 0,
                                  "merges each odd v with 2v, surjective"),
        c));
  }

  {
    Caps c;
    c.ker_rep = [](u64 n) { return n % 2 == 0 ? 0 : n; };
    c.fiber_size = [](u64 n) {
      return n % 2 == 0 ? kInf : ExtNat(1);
    };
    c.in_image = [](u64) { return true; };
    c.image_complement = empty_complement("sink0");
    c.transversal = [](u64 i) { return i == 0 ? 0 : 2 * i - 1; };
    c.transversal_member = [](u64 n) { return n == 0 || n % 2 == 1; };
    c.fat_class_member = [](u64 i, u64 j) -> u64 {
      if (i != 0) throw Error("sink0 has one infinite class");
      return 2 * j;
    };
    c.fat_image_index = [](u64 m) {
      return m == 0 ? std::optional<u64>(0) : std::nullopt;
    };
    add(Transformation(
        "sink0", "evens -> 0; 2m+1 -> m+1",
        [](u64 n) { return n % 2 == 0 ? 0 : (n + 1) / 2; },
        CertifiedProfile::formula(kInf, 0, 1,
                                  "one infinite fiber at 0, surjective"),
        c));
  }

  {
    // cproj_even: 2x -> 2*cfirst(x), odd -> odd.  Fat classes are the
    // doubled pairing rows; odds ride along unchanged.
    Caps c;
    c.ker_rep = [](u64 n) {
      if (n % 2 == 1) return n;
      return 2 * cantor_pair(cantor_first(n / 2), 0);
    };
    c.fiber_size = [](u64 n) {
      return n % 2 == 0 ? kInf : ExtNat(1);
    };
    c.in_image = [](u64) { return true; };
    c.image_complement = empty_complement("cproj_even");
    {
      auto member = [](u64 n) {
        return n % 2 == 1 || cantor_second(n / 2) == 0;
      };
      c.transversal = detail::enum_from_member(member, "cproj_even transversal");
      c.transversal_member = member;
    }
    c.fat_class_member = [](u64 i, u64 j) { return 2 * cantor_pair(i, j); };
    c.fat_image_index = [](u64 m) {
      return m % 2 == 0 ? std::optional<u64>(m / 2) : std::nullopt;
    };
    add(Transformation(
        "cproj_even", "2x -> 2*cfirst(x); odd -> odd",
        [](u64 n) { return n % 2 == 0 ? 2 * cantor_first(n / 2) : n; },
        CertifiedProfile::formula(kInf, 0, kInf,
                                  "doubled cproj on evens, identity on odds"),
        c));
  }

  {
    Caps c;
    c.ker_rep = [](u64 n) { return cantor_pair(cantor_first(n), 0); };
    c.fiber_size = [](u64) { return kInf; };
    c.in_image = [](u64 m) { return m % 2 == 0 && m >= 2; };
    c.image_complement = [](u64 i) -> u64 {
      return i == 0 ? 0 : 2 * i - 1;  // 0, 1, 3, 5, ...
    };
    c.transversal = [](u64 i) { return cantor_pair(i, 0); };
    c.transversal_member = [](u64 n) { return cantor_second(n) == 0; };
    c.fat_class_member = [](u64 i, u64 j) { return cantor_pair(i, j); };
    c.fat_image_index = [](u64 m) {
      return (m % 2 == 0 && m >= 2) ? std::optional<u64>((m - 2) / 2)
                                    : std::nullopt;
    };
    add(Transformation(
        "cproj_double_shift", "n -> 2*cfirst(n)+2",
        [](u64 n) { return 2 * cantor_first(n) + 2; },
        CertifiedProfile::formula(kInf, kInf, kInf,
                                  "cproj onto the evens from 2"),
        c));
  }

  {
    // cproj_even_fold: 2x -> cfirst(x), odd -> odd.  Every value has an
    // infinite fiber; odd values also absorb themselves.
    Caps c;
    auto eval = [](u64 n) { return n % 2 == 0 ? cantor_first(n / 2) : n; };
    c.ker_rep = [eval](u64 n) {
      u64 v = eval(n);
      return v % 2 == 1 ? v : 2 * cantor_pair(v, 0);
    };
    c.fiber_size = [](u64) { return kInf; };
    c.in_image = [](u64) { return true; };
    c.image_complement = empty_complement("cproj_even_fold");
    {
      auto member = [eval](u64 n) {
        u64 v = eval(n);
        if (v % 2 == 1) return n == v;
        return n % 2 == 0 && cantor_second(n / 2) == 0;
      };
      c.transversal =
          detail::enum_from_member(member, "cproj_even_fold transversal");
      c.transversal_member = member;
    }
    c.fat_class_member = [](u64 i, u64 j) -> u64 {
      if (i % 2 == 1) return j == 0 ? i : 2 * cantor_pair(i, j - 1);
      return 2 * cantor_pair(i, j);
    };
    c.fat_image_index = [](u64 m) { return std::optional<u64>(m); };
    add(Transformation(
        "cproj_even_fold", "2x -> cfirst(x); odd -> odd", eval,
        CertifiedProfile::formula(kInf, 0, kInf,
                                  "every value keeps an infinite fiber"),
        c));
  }

  {
    // evenrows: 2m -> 2*pair(first(m), 2*second(m)); odd -> odd.
    // Injective; the even part hits every pairing row in its even columns
    // only, so the image misses the odd columns of every row.
    auto member = [](u64 m) {
      if (m % 2 == 1) return true;
      return cantor_second(m / 2) % 2 == 0;
    };
    Caps c = injective_caps(
        member,
        detail::enum_from_member([member](u64 m) { return !member(m); },
                                 "evenrows complement"));
    add(Transformation(
        "evenrows", "2m -> 2*pair(first(m), 2*second(m)); odd -> odd",
        [](u64 n) -> u64 {
          if (n % 2 == 1) return n;
          u64 m = n / 2;
          return 2 * cantor_pair(cantor_first(m), 2 * cantor_second(m));
        },
        CertifiedProfile::formula(0, kInf, 0,
                                  "injective into the even columns of the "
                                  "doubled rows"),
        c));
  }

  {
    // weaveid: 2n -> 2*pair(n,0); odd -> odd.  Injective, hits each fat
    // class of cproj_even exactly once, so following with cproj_even gives
    // back the identity.
    auto member = [](u64 m) {
      if (m % 2 == 1) return true;
      return cantor_second(m / 2) == 0;
    };
    Caps c = injective_caps(
        member,
        detail::enum_from_member([member](u64 m) { return !member(m); },
                                 "weaveid complement"));
    add(Transformation(
        "weaveid", "2n -> 2*pair(n,0); odd -> odd",
        [](u64 n) -> u64 {
          if (n % 2 == 0) return 2 * cantor_pair(n / 2, 0);
          return n;
        },
        CertifiedProfile::formula(0, kInf, 0,
                                  "injective onto the row heads and odds"),
        c));
  }

  {
    // weave0: 2x -> 2*pair(0,x); 4m+1 -> 2m+1; 4m+3 -> 2*pair(m+1,0).
    // Injective; the even part lands inside pairing row 0.
    auto member = [](u64 m) {
      if (m % 2 == 1) return true;
      u64 y = m / 2;
      u64 i = cantor_first(y);
      if (i == 0) return true;
      return cantor_second(y) == 0;
    };
    Caps c = injective_caps(
        member,
        detail::enum_from_member([member](u64 m) { return !member(m); },
                                 "weave0 complement"));
    add(Transformation(
        "weave0", "2x -> 2*pair(0,x); 4m+1 -> 2m+1; 4m+3 -> 2*pair(m+1,0)",
        [](u64 n) -> u64 {
          if (n % 2 == 0) return 2 * cantor_pair(0, n / 2);
          if (n % 4 == 1) return 2 * (n / 4) + 1;  // 4m+1 -> 2m+1
          return 2 * cantor_pair(n / 4 + 1, 0);    // 4m+3 -> 2*pair(m+1,0)
        },
        CertifiedProfile::formula(0, kInf, 0,
                                  "injective; hits row 0, all odds, and one "
                                  "point per other row"),
        c));
  }

  {
    // weavefat: like weave0 but with the kernel of cproj_even on the
    // evens: 2x -> 2*pair(0, cfirst(x)).
    auto member = [](u64 m) {
      if (m % 2 == 1) return true;
      u64 y = m / 2;
      u64 i = cantor_first(y);
      if (i == 0) return true;
      return cantor_second(y) == 0;
    };
    Caps c;
    c.ker_rep = [](u64 n) {
      if (n % 2 == 1) return n;
      return 2 * cantor_pair(cantor_first(n / 2), 0);
    };
    c.fiber_size = [](u64 n) {
      return n % 2 == 0 ? kInf : ExtNat(1);
    };
    c.in_image = member;
    c.image_complement = detail::enum_from_member(
        [member](u64 m) { return !member(m); }, "weavefat complement");
    {
      auto tmember = [](u64 n) {
        return n % 2 == 1 || cantor_second(n / 2) == 0;
      };
      c.transversal = detail::enum_from_member(tmember, "weavefat transversal");
      c.transversal_member = tmember;
    }
    c.fat_class_member = [](u64 i, u64 j) { return 2 * cantor_pair(i, j); };
    c.fat_image_index = [](u64 m) -> std::optional<u64> {
      if (m % 2 == 1) return std::nullopt;
      u64 y = m / 2;
      if (cantor_first(y) != 0) return std::nullopt;
      return cantor_second(y);
    };
    add(Transformation(
        "weavefat",
        "2x -> 2*pair(0, cfirst(x)); 4m+1 -> 2m+1; 4m+3 -> 2*pair(m+1,0)",
        [](u64 n) -> u64 {
          if (n % 2 == 0) return 2 * cantor_pair(0, cantor_first(n / 2));
          if (n % 4 == 1) return 2 * (n / 4) + 1;
          return 2 * cantor_pair(n / 4 + 1, 0);
        },
        CertifiedProfile::formula(kInf, kInf, kInf,
                                  "fat rows mapped into row 0"),
        c));
  }

  return out;
}

const std::map<std::string, int>& catalog_index() {
  static const std::map<std::string, int> idx = [] {
    std::map<std::string, int> m;
    const auto& all = all_witnesses();
    for (int i = 0; i < static_cast<int>(all.size()); ++i)
      m.emplace(all[i].id(), i);
    return m;
  }();
  return idx;
}

}  // namespace

const std::vector<Transformation>& all_witnesses() {
  static const std::vector<Transformation> table = make_catalog();
  return table;
}

const std::vector<std::string>& catalog_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& t : all_witnesses()) v.push_back(t.id());
    return v;
  }();
  return ids;
}

bool has_witness(const std::string& id) {
  return catalog_index().count(id) > 0;
}

const Transformation& witness(const std::string& id) {
  auto it = catalog_index().find(id);
  if (it == catalog_index().end())
    throw UnknownWitness("unknown witness id: " + id);
  return all_witnesses()[it->second];
}

std::vector<Transformation> catalog(const Profile& p) {
  if (!p.valid())
    throw UnknownProfile("no witnesses for invalid profile");
  std::vector<Transformation> out;
  for (const auto& t : all_witnesses())
    if (t.certified()->profile == p) out.push_back(t);
  return out;
}

const std::vector<Transformation>& mandatory_witnesses() {
  static const std::vector<Transformation> table = [] {
    static const char* ids[12] = {
        "id",     "succ",        "double",      "pred",
        "merge01", "merge01_double", "halve",   "halve_shift",
        "stride4", "cproj",      "cproj_shift", "cproj_double"};
    std::vector<Transformation> v;
    for (const char* id : ids) v.push_back(witness(id));
    // Sort into canonical profile order.
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
      return a.certified()->profile < b.certified()->profile;
    });
    return v;
  }();
  return table;
}

}  // namespace omega
