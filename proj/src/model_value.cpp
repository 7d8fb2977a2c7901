#include "switchsim/estimators/model_value.hpp"

namespace switchsim {

ModelValue ModelValue::build(int T, const Eigen::VectorXd& alpha, const Eigen::MatrixXd& beta,
                             const Eigen::VectorXd& gamma, const std::vector<Eigen::VectorXd>& phi,
                             const std::vector<Eigen::MatrixXd>& Phi,
                             const std::vector<Eigen::VectorXd>& Gamma) {
  ModelValue mv;
  mv.T_ = T;
  mv.w_.resize(T);
  mv.c_.resize(T);
  for (int t = T - 1; t >= 0; --t) {
    if (t == T - 1) {
      mv.w_[t] = beta.row(t);
      for (int a = 0; a < 2; ++a) mv.c_[t][a] = alpha[t] + gamma[t] * a;
    } else {
      mv.w_[t] = beta.row(t).transpose() + Phi[t].transpose() * mv.w_[t + 1];
      for (int a = 0; a < 2; ++a)
        mv.c_[t][a] = alpha[t] + gamma[t] * a +
                      mv.w_[t + 1].dot(phi[t] + Gamma[t] * static_cast<double>(a)) + mv.c_[t + 1][a];
    }
  }
  return mv;
}

ModelValue ModelValue::from_fit(const OlsFit& fit) {
  return build(fit.T, fit.alpha, fit.beta, fit.gamma, fit.phi, fit.Phi, fit.Gamma);
}

ModelValue ModelValue::from_params(const LinearDgpParams& params) {
  return build(params.T, params.alpha, params.beta, params.gamma, params.phi, params.Phi,
               params.Gamma);
}

double value_model_based(const OlsFit& fit, int t, int a, const Eigen::VectorXd& s) {
  return ModelValue::from_fit(fit).value(t, a, s);
}

}  // namespace switchsim
