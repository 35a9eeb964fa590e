// Exhaustive Hilbert-partition enumeration. Deliberately shares nothing with
// the cover search beyond the lattice primitives, so it can serve as an
// oracle for it.

#include <set>
#include <vector>

#include "hilbert/search.hpp"

namespace hilbert {

namespace {

using Residual = std::map<ExponentVector, TruncatedSeries::Coefficient>;

class Enumerator
{
  public:
    Enumerator(const ExponentVector& g, int s) : g_(g), s_(s) {}

    bool partitionExists(Residual& r)
    {
        if (r.empty())
            return true;
        if (failed_.contains(r))
            return false;
        // The lexicographically smallest monomial is the low end of whatever
        // interval covers it.
        const ExponentVector a = r.begin()->first;
        bool found = false;
        forEachPoint(a, g_, [&](const ExponentVector& b) {
            if (found || rho(b, g_) < s_ || !fits(r, a, b))
                return;
            take(r, a, b);
            found = partitionExists(r);
            give(r, a, b);
        });
        if (!found)
            failed_.insert(r);
        return found;
    }

  private:
    static bool fits(const Residual& r, const ExponentVector& a, const ExponentVector& b)
    {
        bool ok = true;
        forEachPoint(a, b, [&](const ExponentVector& c) { ok = ok && r.contains(c); });
        return ok;
    }

    static void take(Residual& r, const ExponentVector& a, const ExponentVector& b)
    {
        forEachPoint(a, b, [&](const ExponentVector& c) {
            auto it = r.find(c);
            if (--it->second == 0)
                r.erase(it);
        });
    }

    static void give(Residual& r, const ExponentVector& a, const ExponentVector& b)
    {
        forEachPoint(a, b, [&](const ExponentVector& c) { ++r[c]; });
    }

    ExponentVector g_;
    int s_;
    std::set<Residual> failed_;
};

} // namespace

int bruteForceHdepth(const TruncatedSeries& p, const ExponentVector& g, const BruteForceCaps& caps)
{
    if (p.bound() != g)
        throw PreconditionError("series bound differs from g");
    if (p.supportSize() > caps.maxSupport || p.maxCoefficient() > caps.maxCoefficient)
        throw CapExceeded("instance exceeds the brute-force caps");

    for (int s = static_cast<int>(g.size()); s > 0; --s) {
        Residual r(p.terms().begin(), p.terms().end());
        Enumerator e(g, s);
        if (e.partitionExists(r))
            return s;
    }
    return 0;
}

} // namespace hilbert
