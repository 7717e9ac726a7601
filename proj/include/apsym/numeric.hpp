#pragma once

#include "apsym/errors.hpp"
#include "apsym/jet_calculus.hpp"

#include <vector>

namespace apsym {

/// Periodic grid x_i = -L/2 + i L/N and an RK4 schedule; epsilon is the
/// concrete value substituted for eps.
struct GridSpec
{
	double L = 40.0;
	int N = 256;
	double dt = 1e-4;
	double T_end = 1.0;
	double epsilon = 0.0;
	/// Keep every n-th step in the trajectory (the final step is always kept).
	int store_every = 100;

	void validate() const;
	std::vector<double> points() const;
};

/// Non-finite value reached at the given step.
class Diverged : public Error
{
  public:
	Diverged(int step, double t);
	int step() const { return step_; }
	double time() const { return t_; }

  private:
	int step_;
	double t_;
};

struct Trajectory
{
	std::vector<double> times;
	std::vector<std::vector<double>> profiles;
};

/// Fourier-spectral derivatives in x, classical RK4 in t. Scalar systems only.
Trajectory integrate_pde(EvolutionSystem const &sys, GridSpec const &grid, std::vector<double> const &ic);

struct DriftRow
{
	double t;
	double value;
	double drift;
};

/// Value of the functional at every stored step, with drift
/// |T(t) - T(0)| / max(1, |T(0)|).
std::vector<DriftRow> monitor_functional(Trajectory const &traj, Functional const &T, GridSpec const &grid);

double max_drift(std::vector<DriftRow> const &rows);

/// u = -(c/2) sech^2(sqrt(c) x / 2), the KdV pulse for u_t = 6 u u_x - u_xxx.
std::vector<double> soliton_profile(GridSpec const &grid, double c = 1.0, double x0 = 0.0);

} // namespace apsym
