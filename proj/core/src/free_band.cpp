#include "crvar/free_band.hpp"

#include <deque>
#include <set>
#include <unordered_map>

#include "crvar/errors.hpp"

namespace crvar {

namespace {

std::size_t distinct_letters(std::string const& w) {
  return std::set<char>(w.begin(), w.end()).size();
}

std::string canon(std::string const& w, std::unordered_map<std::string, std::string>& memo) {
  if (auto it = memo.find(w); it != memo.end()) {
    return it->second;
  }
  std::size_t c = distinct_letters(w);
  std::string result;
  if (c <= 1) {
    result = w.substr(0, 1);
  } else {
    // longest prefix missing exactly one letter, and the letter after it
    std::set<char> seen;
    std::size_t i = 0;
    for (; i < w.size(); ++i) {
      seen.insert(w[i]);
      if (seen.size() == c) {
        break;
      }
    }
    std::string prefix = w.substr(0, i);
    char first_new = w[i];
    seen.clear();
    std::size_t j = w.size();
    while (j-- > 0) {
      seen.insert(w[j]);
      if (seen.size() == c) {
        break;
      }
    }
    std::string suffix = w.substr(j + 1);
    char last_new = w[j];
    result = canon(prefix, memo) + first_new + last_new + canon(suffix, memo);
  }
  memo.emplace(w, result);
  return result;
}

}  // namespace

std::string band_normal_form(std::string const& word) {
  if (word.empty()) {
    throw std::invalid_argument("empty word");
  }
  std::unordered_map<std::string, std::string> memo;
  return canon(word, memo);
}

bool band_equal(std::string const& u, std::string const& v) {
  return band_normal_form(u) == band_normal_form(v);
}

UnaryCayleyTable free_band(std::size_t g) {
  if (g < 1 || g > 3) {
    throw UnsupportedSize("free bands are built for 1 to 3 generators, not " + std::to_string(g));
  }
  std::unordered_map<std::string, std::string> memo;
  std::unordered_map<std::string, Element> index;  // canonical form -> element
  std::vector<std::string> words;                   // shortest representative
  std::vector<std::string> forms;
  std::deque<Element> queue;
  auto visit = [&](std::string const& w) {
    std::string c = canon(w, memo);
    if (index.emplace(c, static_cast<Element>(words.size())).second) {
      words.push_back(w);
      forms.push_back(c);
      queue.push_back(static_cast<Element>(words.size() - 1));
    }
  };
  for (std::size_t x = 0; x < g; ++x) {
    visit(std::string(1, static_cast<char>('a' + x)));
  }
  while (!queue.empty()) {
    Element e = queue.front();
    queue.pop_front();
    for (std::size_t x = 0; x < g; ++x) {
      visit(words[e] + static_cast<char>('a' + x));
    }
  }
  std::size_t n = words.size();
  std::vector<Element> op(n * n), inv(n);
  for (Element a = 0; a < n; ++a) {
    inv[a] = a;
    for (Element b = 0; b < n; ++b) {
      op[a * n + b] = index.at(canon(forms[a] + forms[b], memo));
    }
  }
  UnaryCayleyTable t(n, std::move(op), std::move(inv), "FB" + std::to_string(g));
  t.set_labels(std::move(words));
  return t;
}

UnaryCayleyTable right_zero_extension(UnaryCayleyTable const& f) {
  std::size_t k = f.order();
  std::size_t n = 2 * k + 1;
  Element const one = static_cast<Element>(k);  // identity of F^1, as an index into R
  auto r = [k](Element b) { return static_cast<Element>(k + b); };
  std::vector<Element> op(n * n), inv(n);
  for (Element a = 0; a < n; ++a) {
    bool a_in_f = a < k;
    inv[a] = a_in_f ? f.inv(a) : a;
    for (Element b = 0; b < n; ++b) {
      bool b_in_f = b < k;
      Element v;
      if (a_in_f && b_in_f) {
        v = f.mul(a, b);
      } else if (!b_in_f) {
        v = b;  // everything times r_c is r_c
      } else {
        Element c = a - static_cast<Element>(k);  // a = r_c, b in F
        v = r(c == one ? b : f.mul(c, b));
      }
      op[a * n + b] = v;
    }
  }
  UnaryCayleyTable t(n, std::move(op), std::move(inv), f.name().empty() ? "" : "ext(" + f.name() + ")");
  std::vector<std::string> labels;
  for (Element a = 0; a < k; ++a) {
    labels.push_back(f.label(a));
  }
  for (Element a = 0; a < k; ++a) {
    labels.push_back("r(" + f.label(a) + ")");
  }
  labels.push_back("r(1)");
  t.set_labels(std::move(labels));
  return t;
}

}  // namespace crvar
