#include "apsym/numeric.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

namespace apsym {

namespace {

/// Spectral x-derivatives and pointwise evaluation of differential polynomials.
class Spectral
{
  public:
	explicit Spectral(GridSpec const &g) : n_(g.N), L_(g.L), eps_(g.epsilon), x_(g.points())
	{
		real_ = fftw_alloc_real(n_);
		spec_ = fftw_alloc_complex(n_ / 2 + 1);
		work_ = fftw_alloc_complex(n_ / 2 + 1);
		forward_ = fftw_plan_dft_r2c_1d(n_, real_, spec_, FFTW_ESTIMATE);
		backward_ = fftw_plan_dft_c2r_1d(n_, work_, real_, FFTW_ESTIMATE);
	}
	Spectral(Spectral const &) = delete;
	Spectral &operator=(Spectral const &) = delete;
	~Spectral()
	{
		fftw_destroy_plan(forward_);
		fftw_destroy_plan(backward_);
		fftw_free(real_);
		fftw_free(spec_);
		fftw_free(work_);
	}

	/// jets[k] = k-th derivative of u, k = 0..order.
	void jets(std::vector<double> const &u, int order, std::vector<std::vector<double>> &out)
	{
		out.resize(order + 1);
		out[0] = u;
		if (order == 0)
			return;
		std::copy(u.begin(), u.end(), real_);
		fftw_execute(forward_);
		int half = n_ / 2;
		double k0 = 2 * std::numbers::pi / L_;
		for (int k = 1; k <= order; ++k)
		{
			for (int j = 0; j <= half; ++j)
			{
				std::complex<double> ik(0.0, k0 * j);
				std::complex<double> s(spec_[j][0], spec_[j][1]);
				std::complex<double> v = (j == half && k % 2 == 1) ? 0.0 : s * std::pow(ik, k) / double(n_);
				work_[j][0] = v.real();
				work_[j][1] = v.imag();
			}
			fftw_execute(backward_);
			out[k].assign(real_, real_ + n_);
		}
	}

	/// P evaluated pointwise at time t from precomputed jets.
	void eval(DiffPoly const &P, std::vector<std::vector<double>> const &J, double t, std::vector<double> &out) const
	{
		out.assign(n_, 0.0);
		for (auto const &[m, c] : P.terms())
		{
			double coef = 0, e = 1;
			for (int k = 0; k <= c.order(); ++k, e *= eps_)
				coef += c[k].get_d() * e;
			if (coef == 0)
				continue;
			coef *= std::pow(t, m.t_exp);
			for (int i = 0; i < n_; ++i)
			{
				double v = coef * std::pow(x_[i], m.x_exp);
				for (auto const &[var, p] : m.jets)
					v *= std::pow(J[var.order][i], p);
				out[i] += v;
			}
		}
	}

	int size() const { return n_; }

  private:
	int n_;
	double L_;
	double eps_;
	std::vector<double> x_;
	double *real_;
	fftw_complex *spec_;
	fftw_complex *work_;
	fftw_plan forward_;
	fftw_plan backward_;
};

bool finite(std::vector<double> const &v)
{
	for (double a : v)
		if (!std::isfinite(a))
			return false;
	return true;
}

} // namespace

void GridSpec::validate() const
{
	if (N < 16 || (N & (N - 1)) != 0)
		throw Unsupported("grid size must be a power of two >= 16");
	if (!(dt > 0) || !(L > 0) || !(T_end >= 0) || store_every < 1)
		throw Unsupported("grid requires L > 0, dt > 0, T_end >= 0, store_every >= 1");
}

std::vector<double> GridSpec::points() const
{
	std::vector<double> x(N);
	for (int i = 0; i < N; ++i)
		x[i] = -L / 2 + i * L / N;
	return x;
}

Diverged::Diverged(int step, double t)
    : Error("integration diverged at step " + std::to_string(step) + " (t = " + std::to_string(t) + ")"),
      step_(step), t_(t)
{
}

Trajectory integrate_pde(EvolutionSystem const &sys, GridSpec const &grid, std::vector<double> const &ic)
{
	grid.validate();
	if (sys.components() != 1)
		throw Unsupported("numeric integration supports scalar systems only");
	if (sys.max_order() > 6)
		throw Unsupported("numeric integration supports jet order <= 6");
	if (static_cast<int>(ic.size()) != grid.N)
		throw Unsupported("initial profile length differs from grid size");

	Spectral S(grid);
	DiffPoly const &K = sys.rhs.front();
	int order = std::max(0, K.max_order());
	std::vector<std::vector<double>> J;
	auto rhs = [&](std::vector<double> const &u, double t, std::vector<double> &out) {
		S.jets(u, order, J);
		S.eval(K, J, t, out);
	};

	int n = grid.N;
	int steps = static_cast<int>(std::llround(grid.T_end / grid.dt));
	Trajectory traj;
	traj.times.push_back(0.0);
	traj.profiles.push_back(ic);

	std::vector<double> u = ic, k1, k2, k3, k4, tmp(n);
	for (int s = 1; s <= steps; ++s)
	{
		double t = (s - 1) * grid.dt, h = grid.dt;
		rhs(u, t, k1);
		for (int i = 0; i < n; ++i)
			tmp[i] = u[i] + h / 2 * k1[i];
		rhs(tmp, t + h / 2, k2);
		for (int i = 0; i < n; ++i)
			tmp[i] = u[i] + h / 2 * k2[i];
		rhs(tmp, t + h / 2, k3);
		for (int i = 0; i < n; ++i)
			tmp[i] = u[i] + h * k3[i];
		rhs(tmp, t + h, k4);
		for (int i = 0; i < n; ++i)
			u[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
		if (!finite(u))
			throw Diverged(s, s * grid.dt);
		if (s % grid.store_every == 0 || s == steps)
		{
			traj.times.push_back(s * grid.dt);
			traj.profiles.push_back(u);
		}
	}
	return traj;
}

std::vector<DriftRow> monitor_functional(Trajectory const &traj, Functional const &T, GridSpec const &grid)
{
	Spectral S(grid);
	int order = std::max(0, T.density.max_order());
	if (order > 4)
		throw Unsupported("numeric monitoring supports density jet order <= 4");
	double dx = grid.L / grid.N;
	std::vector<std::vector<double>> J;
	std::vector<double> vals;
	std::vector<DriftRow> rows;
	double T0 = 0;
	for (size_t s = 0; s < traj.profiles.size(); ++s)
	{
		S.jets(traj.profiles[s], order, J);
		S.eval(T.density, J, traj.times[s], vals);
		double total = 0;
		for (double v : vals)
			total += v;
		total *= dx;
		if (s == 0)
			T0 = total;
		rows.push_back({traj.times[s], total, std::abs(total - T0) / std::max(1.0, std::abs(T0))});
	}
	return rows;
}

double max_drift(std::vector<DriftRow> const &rows)
{
	double m = 0;
	for (auto const &r : rows)
		m = std::max(m, r.drift);
	return m;
}

std::vector<double> soliton_profile(GridSpec const &grid, double c, double x0)
{
	std::vector<double> u;
	for (double x : grid.points())
	{
		double s = 1 / std::cosh(std::sqrt(c) / 2 * (x - x0));
		u.push_back(-c / 2 * s * s);
	}
	return u;
}

} // namespace apsym
