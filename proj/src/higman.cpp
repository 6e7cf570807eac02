#include "loopmagnus/higman.hpp"

namespace loopmagnus {

std::string render(const AbelianSymbol &s)
{
	if (!s.is_pair())
		return "x" + std::to_string(s.gen);
	return "<" + render(s.l1) + "," + render(s.l2) + ">";
}

std::string render(const AbelianA &a)
{
	std::string out;
	for (const auto &[s, c] : a.terms()) {
		if (!out.empty())
			out += c < 0 ? " - " : " + ";
		else if (c < 0)
			out += "-";
		const Integer m = abs(c);
		out += (m == 1 ? "" : m.get_str() + "*") + render(s);
	}
	return out.empty() ? "0" : out;
}

std::vector<AbelianVector> abelianization(int n)
{
	const FreeAbelianGroup z(n);
	std::vector<AbelianVector> images;
	for (int i = 1; i <= n; ++i)
		images.push_back(z.basis(i));
	return images;
}

Prop5Witness prop5_witness(int n)
{
	if (n < 3)
		throw DomainError("the witness needs n >= 3");
	GeneratorWord g = commutator(translation(3), translation(2));
	for (int i = 4; i <= n; ++i)
		g = commutator(translation(i), g);

	Prop5Witness out;
	out.n = n;
	out.y = lmlt_term_apply(g, LoopTerm::generator(1));
	const AbelianHigman loop(FreeAbelianGroup(n), RewriteMode::NonCommutative);
	const std::vector<AbelianVector> alpha = abelianization(n);
	const auto d = delta(loop, out.y, alpha);
	out.coefficient = d.a.coefficient(AbelianSymbol::pair(alpha[1], alpha[0]));
	out.alpha_is_x1 = d.l == alpha[0];
	out.psi = render(d.a);
	return out;
}

std::string to_string(Lemma6Status s)
{
	switch (s) {
	case Lemma6Status::Witness: return "witness";
	case Lemma6Status::InComponents: return "w' in Comp(w)";
	case Lemma6Status::AlphaDiffers: return "alpha(w) != alpha(w')";
	case Lemma6Status::NotInjective: return "alpha identifies two components other than {w, w'}";
	default: return "no witness symbol";
	}
}

Lemma6Result lemma6_check(const LoopTerm &w, const LoopTerm &w2, DeltaEvaluator<FreeAbelianGroup> &eval,
                          RewriteMode mode)
{
	if (!is_reduced(w, mode) || !is_reduced(w2, mode))
		throw DomainError("Lemma 6 takes reduced words");
	Lemma6Result res;
	const std::vector<LoopTerm> cw = components(w);
	if (std::binary_search(cw.begin(), cw.end(), w2)) {
		res.status = Lemma6Status::InComponents;
		return res;
	}
	const auto &dw = eval(w);
	const auto &dw2 = eval(w2);
	if (!(dw.l == dw2.l)) {
		res.status = Lemma6Status::AlphaDiffers;
		return res;
	}

	std::vector<LoopTerm> all = cw;
	const std::vector<LoopTerm> cw2 = components(w2);
	all.insert(all.end(), cw2.begin(), cw2.end());
	std::sort(all.begin(), all.end());
	all.erase(std::unique(all.begin(), all.end()), all.end());
	std::map<AbelianVector, LoopTerm> seen;
	for (const LoopTerm &u : all) {
		auto [it, inserted] = seen.try_emplace(eval(u).l, u);
		if (inserted)
			continue;
		const LoopTerm &v = it->second;
		const bool exempt = (u == w && v == w2) || (u == w2 && v == w);
		if (!exempt) {
			res.status = Lemma6Status::NotInjective;
			res.collapsed = std::make_pair(v, u);
			return res;
		}
	}

	const AbelianA &a = eval(w).a;
	for (const auto &[s, c] : eval(w2).a.terms())
		if ((c == 1 || c == -1) && a.coefficient(s) == 0) {
			res.status = Lemma6Status::Witness;
			res.witness = s;
			return res;
		}
	res.status = Lemma6Status::NoWitness;
	return res;
}

Lemma6Result lemma6_check(const LoopTerm &w, const LoopTerm &w2, const AbelianHigman &loop,
                          const std::vector<AbelianVector> &alpha)
{
	DeltaEvaluator<FreeAbelianGroup> eval(loop, alpha);
	return lemma6_check(w, w2, eval, loop.mode());
}

Corollary1Result corollary1_check(const std::vector<LoopTerm> &S, DeltaEvaluator<FreeAbelianGroup> &eval)
{
	const std::set<LoopTerm> members(S.begin(), S.end());
	for (const LoopTerm &s : members)
		for (const LoopTerm &c : components(s))
			if (!members.count(c))
				throw DomainError("set is not closed under components: " + render(c) + " missing");
	Corollary1Result res;
	res.size = members.size();
	std::set<AbelianVector> alphas;
	std::set<LAElement<AbelianVector>> deltas;
	for (const LoopTerm &s : members) {
		const auto &d = eval(s);
		alphas.insert(d.l);
		deltas.insert(d);
	}
	res.alpha_images = alphas.size();
	res.delta_images = deltas.size();
	res.applicable = res.alpha_images < res.size;
	res.holds = !res.applicable || res.delta_images > res.alpha_images;
	return res;
}

Corollary1Result corollary1_check(const std::vector<LoopTerm> &S, const AbelianHigman &loop,
                                  const std::vector<AbelianVector> &alpha)
{
	DeltaEvaluator<FreeAbelianGroup> eval(loop, alpha);
	return corollary1_check(S, eval);
}

namespace {

/// Reduced words bucketed by abelian image, buckets and members in order.
std::map<AbelianVector, std::vector<LoopTerm>> alpha_buckets(const std::vector<LoopTerm> &words,
                                                             DeltaEvaluator<FreeAbelianGroup> &eval)
{
	std::map<AbelianVector, std::vector<LoopTerm>> buckets;
	for (const LoopTerm &w : words)
		buckets[eval(w).l].push_back(w);
	return buckets;
}

} // namespace

Lemma6Scan lemma6_scan(int alphabet, int max_leaves, RewriteMode mode)
{
	const AbelianHigman loop(FreeAbelianGroup(alphabet), mode);
	DeltaEvaluator<FreeAbelianGroup> eval(loop, abelianization(alphabet));
	const std::vector<LoopTerm> words = enumerate_reduced(alphabet, max_leaves, mode);
	Lemma6Scan scan;
	scan.words = words.size();
	for (const auto &[image, bucket] : alpha_buckets(words, eval))
		for (const LoopTerm &w : bucket)
			for (const LoopTerm &w2 : bucket) {
				if (w == w2)
					continue;
				++scan.ordered_pairs;
				const Lemma6Result r = lemma6_check(w, w2, eval, mode);
				if (r.status == Lemma6Status::Witness) {
					++scan.hypotheses_hold;
					++scan.witnesses;
				} else if (r.status == Lemma6Status::NoWitness) {
					++scan.hypotheses_hold;
					scan.counterexamples.emplace_back(w, w2);
				}
			}
	return scan;
}

Corollary1Scan corollary1_scan(int alphabet, int max_leaves, RewriteMode mode)
{
	const AbelianHigman loop(FreeAbelianGroup(alphabet), mode);
	DeltaEvaluator<FreeAbelianGroup> eval(loop, abelianization(alphabet));
	const std::vector<LoopTerm> words = enumerate_reduced(alphabet, max_leaves, mode);
	Corollary1Scan scan;
	auto run = [&](const std::vector<LoopTerm> &S) {
		++scan.sets;
		const Corollary1Result r = corollary1_check(S, eval);
		if (r.applicable)
			++scan.applicable;
		if (!r.holds)
			scan.counterexamples.push_back(S);
	};

	for (const LoopTerm &w : words)
		run(components(w));
	for (const auto &[image, bucket] : alpha_buckets(words, eval))
		for (std::size_t i = 0; i < bucket.size(); ++i)
			for (std::size_t j = i + 1; j < bucket.size(); ++j) {
				std::vector<LoopTerm> S = components(bucket[i]);
				const std::vector<LoopTerm> c2 = components(bucket[j]);
				S.insert(S.end(), c2.begin(), c2.end());
				run(S);
			}
	for (int k = 1; k <= max_leaves; ++k) {
		std::vector<LoopTerm> S;
		for (const LoopTerm &w : words)
			if (w.leaf_count() <= k)
				S.push_back(w);
		run(S);
	}
	return scan;
}

} // namespace loopmagnus
