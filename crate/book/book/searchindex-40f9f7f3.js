window.search = Object.assign(window.search, JSON.parse('{"doc_urls":["intro.html#introduction","intro.html#a-thirty-second-tour","environments.html#environments-and-exact-evaluation","environments.html#four-families","environments.html#occupancies-and-values-exactly","cloning.html#behavioral-cloning","cloning.html#datasets-and-counting","cloning.html#when-cloning-is-exact-and-when-it-drifts","cloning.html#featurized-training-and-overfitting","saddle.html#the-saddle-point-objective","saddle.html#the-offline-loss","saddle.html#γ--0-reduces-to-cloning","saddle.html#alternating-descentascent","saddle.html#the-mixed-online-variant","saddle.html#the-variational-dual-sanity-checked","matching.html#occupancy-matching-and-certificates","matching.html#brute-force-uniqueness-certificates","matching.html#why-this-matters","experiments.html#experiments-and-the-command-line","experiments.html#the-three-subcommands","experiments.html#config-format","experiments.html#the-eight-shipped-experiments","experiments.html#output-layout","experiments.html#the-acceptance-and-property-suites"],"index":{"documentStore":{"docInfo":{"0":{"body":182,"breadcrumbs":2,"title":1},"1":{"body":94,"breadcrumbs":4,"title":3},"10":{"body":165,"breadcrumbs":5,"title":2},"11":{"body":34,"breadcrumbs":6,"title":3},"12":{"body":119,"breadcrumbs":5,"title":2},"13":{"body":83,"breadcrumbs":6,"title":3},"14":{"body":52,"breadcrumbs":7,"title":4},"15":{"body":173,"breadcrumbs":6,"title":3},"16":{"body":148,"breadcrumbs":7,"title":4},"17":{"body":41,"breadcrumbs":4,"title":1},"18":{"body":27,"breadcrumbs":6,"title":3},"19":{"body":107,"breadcrumbs":5,"title":2},"2":{"body":39,"breadcrumbs":6,"title":3},"20":{"body":152,"breadcrumbs":5,"title":2},"21":{"body":130,"breadcrumbs":6,"title":3},"22":{"body":47,"breadcrumbs":5,"title":2},"23":{"body":60,"breadcrumbs":6,"title":3},"3":{"body":184,"breadcrumbs":5,"title":2},"4":{"body":118,"breadcrumbs":6,"title":3},"5":{"body":35,"breadcrumbs":4,"title":2},"6":{"body":87,"breadcrumbs":4,"title":2},"7":{"body":143,"breadcrumbs":5,"title":3},"8":{"body":134,"breadcrumbs":5,"title":3},"9":{"body":33,"breadcrumbs":6,"title":3}},"docs":{"0":{"body":"Imitation Lab is a laboratory for studying imitation learning in settings\\nsmall enough that nothing needs to be estimated: environments are tabular\\nepisodic decision processes whose occupancy measures, policy values, and\\noptimal policies are all computed exactly. That exactness is the point. When\\na learned policy underperforms the demonstrator, the gap is a number you can\\ntrust to many digits, not a Monte Carlo estimate, so claims like “this\\nobjective recovers the counting policy” or “thinning the demonstrations\\nbreaks this method but not that one” become checkable facts rather than\\nplots with error bars. The library implements three families of learners over a shared core: Behavioral cloning — the per-timestep counting policy that matches\\nempirical action frequencies, and a featurized maximum-likelihood trainer\\nwith optional weight decay for studying overfitting with redundant\\nfeatures. A saddle-point distribution-matching objective — a log-mean-exp\\nadversarial loss over a potential table ν and policy logits, in offline\\n(demonstrations only), γ = 0, and mixed replay variants, optimized by\\nalternating gradient descent–ascent. ℓ1 occupancy matching — the total-variation-style distance between a\\npolicy’s exact occupancy and the demonstrator’s empirical occupancy,\\nwith brute-force certificates that the counting policy is its strictly\\nunique minimizer. Everything downstream of these — demonstration datasets, thinning,\\ncoverage-scaling sweeps, deterministic-versus-slippery comparisons — lives\\nin a set of reproducible experiments driven by TOML configs and a small\\ncommand-line tool: $ ilab run configs/bc-scaling-det.toml --out runs/scaling\\n$ ilab summarize runs/scaling\\n$ ilab verify runs/scaling Every run is deterministic given its seeds, writes its resolved config next\\nto its results, and carries machine-checkable pass/fail verdicts.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"#![allow(unused)] fn main() {\\nuse imitation_lab::envs::{build_env, optimal_expert, EnvFamily, EnvSpec};\\nuse imitation_lab::datasets::collect_expert;\\nuse imitation_lab::bc::{bc_counting, CountingMode};\\nuse imitation_lab::mdp::policy_value; let mdp = build_env(&EnvSpec { family: EnvFamily::DetChain, num_states: 6, num_actions: 2, horizon: 5, grid_width: None, slip: None, num_initial_states: 2, seed: 0,\\n})?;\\nlet expert = optimal_expert(&mdp)?.policy;\\nlet demos = collect_expert(&mdp, &expert, 10, 7)?;\\nlet cloned = bc_counting(&demos, mdp.dims(), CountingMode::PerTimeStep)?; let gap = policy_value(&mdp, &expert)? - policy_value(&mdp, &cloned)?;\\nassert!(gap.abs() < 1e-9); // all starts demonstrated, deterministic dynamics Ok::<(), imitation_lab::Error>(()) } The rest of this guide walks through each layer: the environment zoo and\\nexact evaluation, cloning and its failure modes, the saddle-point objective\\nand its optimizer, the occupancy-matching view with its uniqueness\\ncertificates, and finally the experiment harness. Every code block in this guide compiles and runs as a test of the\\nworkspace, so the snippets cannot silently drift from the library.","breadcrumbs":"Introduction » A thirty-second tour","id":"1","title":"A thirty-second tour"},"10":{"body":"For a dataset of demonstration steps, the offline objective is L(ν, π) = log( mean over steps of exp δ ) − (1 − γ) · mean over steps of E_{a~π}[ν]\\nδ = ν(t, s, a) − γ · E_{a\'~π(·|t+1, s\')}[ν(t+1, s\', a\')] Both terms are means over the dataset, the log-mean-exp is evaluated\\nmax-shifted for numerical stability, and the Bellman term is dropped on\\neach trajectory’s final step. Two consequences worth knowing before\\ntraining anything: Discounting needs complete data. For γ > 0 the δ term looks up the\\nsuccessor state, so the dataset must consist of temporally consecutive\\ntrajectories. Thinned data is rejected, with an error explaining that\\nthe Bellman term cannot be formed. At γ = 0 any dataset works. The counting policy is an equilibrium. With complete data, setting\\nthe policy to the counting answer and the potential to a constant makes\\nthe loss exactly zero with vanishing gradients in every coordinate. #![allow(unused)] fn main() {\\nuse imitation_lab::envs::{build_env, optimal_expert, EnvFamily, EnvSpec};\\nuse imitation_lab::datasets::{collect_expert, subsample};\\nuse imitation_lab::valuedice::{offline_loss, SaddleState};\\nuse imitation_lab::Error; let mdp = build_env(&EnvSpec { family: EnvFamily::DetChain, num_states: 6, num_actions: 2, horizon: 5, grid_width: None, slip: None, num_initial_states: 2, seed: 0,\\n})?;\\nlet expert = optimal_expert(&mdp)?.policy;\\nlet demos = collect_expert(&mdp, &expert, 4, 1)?;\\nlet state = SaddleState::new(mdp.dims(), false, false); // Complete data: any discount is fine.\\noffline_loss(&demos, &state, 0.9)?; // Thinned data: the discounted objective refuses...\\nlet thin = subsample(&demos, 2, 0)?;\\nassert!(matches!(offline_loss(&thin, &state, 0.9), Err(Error::Data(_)))); // ...but the γ = 0 objective accepts it.\\noffline_loss(&thin, &state, 0.0)?; Ok::<(), imitation_lab::Error>(()) }","breadcrumbs":"The saddle-point objective » The offline loss","id":"10","title":"The offline loss"},"11":{"body":"At γ = 0 the Bellman term vanishes and the game decouples: the optimal\\npolicy is the counting policy, independent of the potential. Training the\\nsaddle-point objective at γ = 0 is therefore an expensive way to compute\\nbehavioral cloning — a reduction the acceptance suite verifies by training\\non random instances and comparing argmaxes cell by cell.","breadcrumbs":"The saddle-point objective » γ = 0 reduces to cloning","id":"11","title":"γ = 0 reduces to cloning"},"12":{"body":"gda_optimize runs the game: one potential step (gradient descent on ν\\nwith optional decoupled weight decay), then one policy step (ascent on the\\nlogits against the updated potential). Runs are deterministic given the\\nseed; divergence (non-finite loss) is reported as an error with the step\\nnumber. #![allow(unused)] fn main() {\\nuse imitation_lab::envs::{build_env, optimal_expert, EnvFamily, EnvSpec};\\nuse imitation_lab::datasets::{collect_expert, visitation};\\nuse imitation_lab::bc::{bc_counting, CountingMode};\\nuse imitation_lab::valuedice::{gda_optimize, LossKind, SaddleState}; let mdp = build_env(&EnvSpec { family: EnvFamily::Random, num_states: 4, num_actions: 2, horizon: 3, grid_width: None, slip: None, num_initial_states: 2, seed: 21,\\n})?;\\nlet expert = optimal_expert(&mdp)?.policy;\\nlet demos = collect_expert(&mdp, &expert, 1, 2)?; let state = SaddleState::new(mdp.dims(), false, false);\\nlet (trained, _trace) = gda_optimize( &LossKind::Gamma0, &mdp, &demos, None, state, 4_000, /* seed */ 0, /* eval_every */ 0, None,\\n)?; // The trained policy\'s argmax matches counting at every demonstrated cell.\\nlet counting = bc_counting(&demos, mdp.dims(), CountingMode::PerTimeStep)?;\\nlet seen = visitation(&demos, mdp.dims())?;\\nlet policy = trained.policy()?;\\nfor t in 0..3 { for s in seen.visited_states(t) { assert_eq!(policy.argmax(t, s), counting.argmax(t, s)); }\\n} Ok::<(), imitation_lab::Error>(()) }","breadcrumbs":"The saddle-point objective » Alternating descent–ascent","id":"12","title":"Alternating descent–ascent"},"13":{"body":"With an environment to interact with, the objective can mix the\\ndemonstration distribution with a replay buffer of interaction tuples at\\nweight α: the log term discriminates over a weighted mixture of expert\\nand replay samples, the linear terms split accordingly, and Bellman\\nexpectations are taken exactly under the transition kernel on both\\nsides. online_train wraps the loop — act, push tuples, update — and the online-complete-vs-sub experiment uses it to measure what interaction\\nbuys back when the demonstrations are thinned. A detail that matters for verification: the replay batch for a given call\\nis drawn from the buffer by an explicit seed, so a loss evaluation and its\\ngradient evaluation see the identical batch — which is what makes\\nfinite-difference checks of the mixed objective meaningful. The gradient\\nsuite in the acceptance tests exercises exactly that.","breadcrumbs":"The saddle-point objective » The mixed online variant","id":"13","title":"The mixed online variant"},"14":{"body":"The log-mean-exp construction is an instance of a variational\\nrepresentation of the KL divergence: minimizing log E_q[e^x] − E_p[x] over test functions x attains −KL(p ‖ q), at\\nthe closed-form minimizer x = log(p/q). dv_dual_value evaluates the dual at its closed-form optimizer and\\ncross-checks the result against a direct KL computation, refusing to\\nanswer if the two disagree — one of the acceptance criteria drives 100\\nrandom distribution pairs through this identity.","breadcrumbs":"The saddle-point objective » The variational dual, sanity-checked","id":"14","title":"The variational dual, sanity-checked"},"15":{"body":"The third lens drops games and likelihoods entirely and asks a geometric\\nquestion: among all policies, which one’s exact occupancy measure is\\nclosest — in ℓ1 distance, time slice by time slice — to the demonstrator’s empirical occupancy? l1_loss(π) = Σ_t Σ_{s,a} | d_π(t, s, a) − d̂_E(t, s, a) | Here d_π is computed exactly by forward recursion and d̂_E is the\\nnormalized visit frequency of the dataset. The loss lives in [0, 2H] —\\neach slice is the ℓ1 distance between two distributions, which is at most\\n2. #![allow(unused)] fn main() {\\nuse imitation_lab::envs::{build_env, optimal_expert, EnvFamily, EnvSpec};\\nuse imitation_lab::datasets::collect_expert;\\nuse imitation_lab::bc::{bc_counting, CountingMode};\\nuse imitation_lab::matching::{cost_to_go, l1_loss, EmpiricalExpertOccupancy};\\nuse imitation_lab::mdp::Policy; let mdp = build_env(&EnvSpec { family: EnvFamily::DetChain, num_states: 6, num_actions: 2, horizon: 5, grid_width: None, slip: None, num_initial_states: 2, seed: 0,\\n})?;\\nlet expert = optimal_expert(&mdp)?.policy;\\nlet demos = collect_expert(&mdp, &expert, 8, 3)?;\\nlet target = EmpiricalExpertOccupancy::from_dataset(&demos, mdp.dims())?; let counting = bc_counting(&demos, mdp.dims(), CountingMode::PerTimeStep)?;\\nlet uniform = Policy::uniform(mdp.dims()); // The counting policy is closer to the demonstrations than uniform is.\\nlet counting_loss = l1_loss(&mdp, &counting, &target)?;\\nassert!(counting_loss < l1_loss(&mdp, &uniform, &target)?);\\nassert!((0.0..=10.0).contains(&counting_loss)); // bounds: [0, 2H] // The loss telescopes over time: the cost from step t equals the slice at\\n// t plus the cost from t + 1.\\nlet total = cost_to_go(&mdp, &uniform, &target, 0)?;\\nassert!((total - l1_loss(&mdp, &uniform, &target)?).abs() < 1e-12); Ok::<(), imitation_lab::Error>(()) } cost_to_go(…, from) sums the slice distances from step from onward, so cost_to_go(…, 0) recovers the full loss and the sequence telescopes —\\nthe conservation acceptance test checks this identity to 1e-12 across\\nrandomized instances.","breadcrumbs":"Occupancy matching and certificates » Occupancy matching and certificates","id":"15","title":"Occupancy matching and certificates"},"16":{"body":"For a single complete demonstration, exactly one state is visited per time\\nstep, and a policy only influences the loss through its rows at those\\nvisited cells. That makes the optimization over deterministic policies finite: with A actions and horizon H there are A^H assignments of\\nactions to visited cells. certify_unique_optimum enumerates all of them\\n(with everything off-support pinned to uniform), evaluates each loss\\nexactly, and reports whether the counting policy is the strict minimizer —\\nplus the margin to the runner-up. It then samples stochastic policies at\\nthe visited cells and checks none beats the counting answer either. #![allow(unused)] fn main() {\\nuse imitation_lab::envs::{build_env, optimal_expert, EnvFamily, EnvSpec};\\nuse imitation_lab::datasets::collect_expert;\\nuse imitation_lab::matching::certify_unique_optimum; let mdp = build_env(&EnvSpec { family: EnvFamily::Random, num_states: 4, num_actions: 3, horizon: 4, grid_width: None, slip: None, num_initial_states: 2, seed: 11,\\n})?;\\nlet expert = optimal_expert(&mdp)?.policy;\\nlet demo = collect_expert(&mdp, &expert, 1, 5)?; let cert = certify_unique_optimum(&mdp, &demo, 200, 7)?;\\nassert!(cert.unique);\\nassert!(cert.min_gap > 0.0); // strict: runner-up is worse\\nassert_eq!(cert.num_deterministic, 81); // 3^4 assignments enumerated\\nassert_eq!(cert.stochastic_violations, 0); Ok::<(), imitation_lab::Error>(()) } The certificate records the full evidence — dimensions, the optimum’s\\nloss, the runner-up’s loss, the margin, how many deterministic and\\nstochastic competitors were checked — and render_report formats it for\\nthe experiment logs. Search spaces beyond a million assignments are\\nrefused rather than silently truncated.","breadcrumbs":"Occupancy matching and certificates » Brute-force uniqueness certificates","id":"16","title":"Brute-force uniqueness certificates"},"17":{"body":"The three lenses agree where they should: the counting policy is\\nsimultaneously the maximum-likelihood clone, the γ = 0 saddle-point\\nsolution, and the certified unique ℓ1 occupancy matcher. The acceptance\\nsuite pins each of these down as a computation, which is what lets the\\nexperiments attribute any difference between methods to the things that\\nactually differ — discounting, interaction, thinned data, or feature\\nnoise — rather than to estimation error.","breadcrumbs":"Occupancy matching and certificates » Why this matters","id":"17","title":"Why this matters"},"18":{"body":"Everything the library claims is backed by a configured, seeded,\\nre-runnable experiment. The ilab binary runs them from TOML files,\\nwrites CSV results plus a machine-readable verdict, and can summarize or\\nre-verify a finished output directory.","breadcrumbs":"Experiments and the command line » Experiments and the command line","id":"18","title":"Experiments and the command line"},"19":{"body":"ilab run <config.toml> [--out DIR] [--seeds 1,2,3] [--override k.path=value]...\\nilab summarize <DIR>\\nilab verify <DIR> run executes one experiment end to end and prints each built-in\\ncheck as [ok] or [FAILED], ending with a one-line verdict. The exit\\ncode reports whether the run completed, not whether checks passed — verify is the gate. summarize prints a per-condition table (count, mean, min, max of each\\nmetric) from a results directory. verify re-reads verdict.json and exits nonzero unless every check\\nin it passed — this is what CI should call. Output location precedence: --out flag, then out in the config, then\\nthe ILAB_OUT environment variable (as a parent directory), then runs/<experiment>. --override edits any config key from the command line with dotted\\npaths — --override env.seed=9 --override gda.steps=2000 — and --seeds\\nis shorthand for overriding the seed list. The resolved config is\\nwritten into the output directory as config.toml, so a finished run\\ndocuments exactly what it ran.","breadcrumbs":"Experiments and the command line » The three subcommands","id":"19","title":"The three subcommands"},"2":{"body":"An environment is an episodic tabular decision process: finitely many\\nstates and actions, a horizon H, a time-indexed transition kernel, a\\nreward in [0, 1] per state–action pair, and an initial distribution that\\nis uniform over the first num_initial_states states. Policies may also be\\ntime-indexed, so everything downstream — occupancies, values, experts — is\\na small dense array.","breadcrumbs":"Environments and exact evaluation » Environments and exact evaluation","id":"2","title":"Environments and exact evaluation"},"20":{"body":"experiment = \\"subsample-compare\\" # which experiment definition to run\\nseeds = [2021, 2022, 2023, 2024, 2025]\\nm = [10] # demonstration counts [env] # environment under study\\nfamily = \\"det_chain\\" # det_chain | det_grid | reset_cliff | random\\nnum_states = 10\\nnum_actions = 3\\nhorizon = 8\\nnum_initial_states = 2\\nseed = 17 [gda] # saddle-point optimizer settings\\nsteps = 10000\\nnu_lr = 0.1\\npolicy_lr = 0.5\\ngamma = 0.0\\neval_every = 1000 [subsample]\\nrate = 8 # keep every 8th step of each trajectory Sections you don’t need may be omitted; unknown keys are rejected. The\\nsame structs are available programmatically: #![allow(unused)] fn main() {\\nuse imitation_lab::experiments::ExperimentConfig; let cfg = ExperimentConfig::from_toml_str(r#\\" experiment = \\"dv-check\\" seeds = [2021] [env] family = \\"random\\" num_states = 4 num_actions = 2 horizon = 2 num_initial_states = 2 seed = 29 [dv] pairs = 25 support = 8\\n\\"#)?;\\nassert_eq!(cfg.seeds, vec![2021]); Ok::<(), imitation_lab::Error>(()) } and run_experiment returns the same metric rows, checks, traces, and\\nreports that run writes to disk: #![allow(unused)] fn main() { use imitation_lab::experiments::ExperimentConfig;\\nuse imitation_lab::experiments::run_experiment; let cfg = ExperimentConfig::from_toml_str(r#\\" experiment = \\"dv-check\\" seeds = [2021] [env] family = \\"random\\" num_states = 4 num_actions = 2 horizon = 2 num_initial_states = 2 seed = 29 [dv] pairs = 25 support = 8 \\"#)?;\\nlet out = run_experiment(&cfg)?;\\nassert!(out.pass()); Ok::<(), imitation_lab::Error>(()) }","breadcrumbs":"Experiments and the command line » Config format","id":"20","title":"Config format"},"21":{"body":"Each file under configs/ pins one claim: Config Claim it checks thm2-reduction.toml Training the saddle objective at γ = 0 recovers the counting policy’s argmax at every demonstrated cell. l1-uniqueness.toml Counting is the certified strictly-unique ℓ1 occupancy matcher for a single complete demonstration. bc-scaling-det.toml The mean cloning gap versus demonstration count on a deterministic grid has log-log slope ≈ −1. bc-det-vs-stoch.toml A slippery cliff strictly out-gaps its deterministic twin at every matched demonstration count. subsample-compare.toml Complete data: cloning and the γ = 0 objective both land within 5% of the expert; thinned to one step in eight, both miss by ≥ 2×. overfit-reg.toml With 3× noise feature dimensions and one demonstration, weight decay beats no decay in ≥ 4 of 5 seeds. dv-check.toml The variational dual evaluates to −KL within 1e-6 on random distribution pairs. online-complete-vs-sub.toml On thinned data the discounted offline objective refuses outright; the online variant trains but lands several times worse than its complete-data run.","breadcrumbs":"Experiments and the command line » The eight shipped experiments","id":"21","title":"The eight shipped experiments"},"22":{"body":"A run of configs/subsample-compare.toml produces: runs/subsample-compare/\\n├── config.toml # resolved config, re-runnable as-is\\n├── results.csv # condition,seed,metric,value rows\\n├── summary.csv # per-condition aggregates\\n├── trace_dice_complete_2021.csv # optimizer traces where applicable\\n├── ...\\n└── verdict.json # named checks with pass/fail + detail Experiments that produce human-readable evidence (the uniqueness\\ncertificates) also write report_*.txt files. Runs are byte-for-byte\\nreproducible: same config, same seeds, same bytes.","breadcrumbs":"Experiments and the command line » Output layout","id":"22","title":"Output layout"},"23":{"body":"The integration test target acceptance drives ten headline checks — six\\ndirectly against the library and four through the shipped configs above —\\neach printing one acceptance N <name>: PASS line. The properties\\ntarget layers randomized invariant checks (occupancy normalization, value\\ncross-checks, serialization round-trips, thinning bounds, shift\\ninvariance) on top. Both run under plain cargo test --workspace; show\\nthe per-criterion lines with: cargo test --test acceptance -- --nocapture","breadcrumbs":"Experiments and the command line » The acceptance and property suites","id":"23","title":"The acceptance and property suites"},"3":{"body":"All environments come from EnvSpec and build_env: DetChain — a deterministic line of states. One designated action\\nadvances ( s + 1, saturating at the end) and earns reward 1; every other\\naction stays put and earns 0. The simplest setting where a single perfect\\ndemonstration pins down optimal behavior along its path. DetGrid — a deterministic torus grid. The rewarded action moves right;\\nthe remaining actions cycle through up, down, and left. Wrong actions move rather than stay, so one mistake relocates the agent — a clean\\nstage for compounding-error questions. ResetCliff — the slippery variant. Good states form a loop where the\\ndesignated action advances with probability 1 − slip and teleports\\nuniformly over the loop with probability slip; any other action falls\\ninto an absorbing zero-reward state. Slipping never costs the expert\\nvalue, but it drags a cloned policy onto states the demonstrations never\\ncovered. Random — transition rows and rewards drawn uniformly at random from a\\nseed. The stochastic instances used for randomized checks. #![allow(unused)] fn main() {\\nuse imitation_lab::envs::{build_env, optimal_expert, EnvFamily, EnvSpec};\\nuse imitation_lab::mdp::policy_value; let mdp = build_env(&EnvSpec { family: EnvFamily::ResetCliff, num_states: 9, num_actions: 3, horizon: 10, grid_width: None, slip: Some(0.2), num_initial_states: 4, seed: 5,\\n})?; // Slipping teleports within the rewarded loop, so the optimal value is\\n// exactly the horizon regardless of the slip probability.\\nlet expert = optimal_expert(&mdp)?;\\nassert!((policy_value(&mdp, &expert.policy)? - 10.0).abs() < 1e-9); Ok::<(), imitation_lab::Error>(()) } optimal_expert solves the process by backward induction and returns a\\ndeterministic time-indexed policy; on the deterministic families its value\\nequals the horizon whenever every start can reach the rewarded behavior\\nimmediately.","breadcrumbs":"Environments and exact evaluation » Four families","id":"3","title":"Four families"},"4":{"body":"The occupancy measure of a policy assigns each (t, s, a) the exact\\nprobability of being in s and choosing a at time t. It is computed by\\nforward recursion, and each time slice is a probability distribution: #![allow(unused)] fn main() {\\nuse imitation_lab::envs::{build_env, optimal_expert, EnvFamily, EnvSpec};\\nuse imitation_lab::mdp::{compute_occupancy, policy_value}; let mdp = build_env(&EnvSpec { family: EnvFamily::Random, num_states: 5, num_actions: 3, horizon: 4, grid_width: None, slip: None, num_initial_states: 2, seed: 11,\\n})?;\\nlet policy = optimal_expert(&mdp)?.policy;\\nlet occ = compute_occupancy(&mdp, &policy)?; let mut value_from_occupancy = 0.0;\\nfor t in 0..4 { let mut slice = 0.0; for s in 0..5 { for a in 0..3 { slice += occ.prob(t, s, a); value_from_occupancy += occ.prob(t, s, a) * mdp.reward(s, a); } } assert!((slice - 1.0).abs() < 1e-12);\\n} // Sum of occupancy-weighted rewards equals backward-induction evaluation.\\nassert!((value_from_occupancy - policy_value(&mdp, &policy)?).abs() < 1e-9); Ok::<(), imitation_lab::Error>(()) } policy_value itself runs two independent evaluation routes internally —\\noccupancy-weighted rewards and backward induction — and refuses to answer\\nif they disagree beyond 1e-9, so a returned value is already a\\ncross-checked quantity.","breadcrumbs":"Environments and exact evaluation » Occupancies and values, exactly","id":"4","title":"Occupancies and values, exactly"},"5":{"body":"Cloning treats imitation as supervised learning: estimate the\\ndemonstrator’s conditional action distribution at each state and act on the\\nestimate. In the tabular setting the maximum-likelihood estimate is the counting policy — at each demonstrated cell, action probabilities equal\\nempirical frequencies; at undemonstrated cells the policy falls back to\\nuniform.","breadcrumbs":"Behavioral cloning » Behavioral cloning","id":"5","title":"Behavioral cloning"},"6":{"body":"collect_expert rolls out a policy and records complete trajectories of (t, s, a, s\') steps. bc_counting turns a dataset into a policy, either\\nper time step or aggregated over time: #![allow(unused)] fn main() {\\nuse imitation_lab::envs::{build_env, optimal_expert, EnvFamily, EnvSpec};\\nuse imitation_lab::datasets::{collect_expert, visitation};\\nuse imitation_lab::bc::{bc_counting, CountingMode}; let mdp = build_env(&EnvSpec { family: EnvFamily::DetChain, num_states: 8, num_actions: 3, horizon: 6, grid_width: None, slip: None, num_initial_states: 2, seed: 1,\\n})?;\\nlet expert = optimal_expert(&mdp)?.policy;\\nlet demos = collect_expert(&mdp, &expert, 5, 3)?;\\nlet cloned = bc_counting(&demos, mdp.dims(), CountingMode::PerTimeStep)?; // On demonstrated cells the counting policy reproduces the deterministic\\n// expert exactly; elsewhere it is uniform.\\nlet seen = visitation(&demos, mdp.dims())?;\\nfor t in 0..6 { for s in seen.visited_states(t) { assert_eq!(cloned.argmax(t, s), expert.argmax(t, s)); }\\n} Ok::<(), imitation_lab::Error>(()) }","breadcrumbs":"Behavioral cloning » Datasets and counting","id":"6","title":"Datasets and counting"},"7":{"body":"Two facts organize every experiment in this workspace: Deterministic dynamics + demonstrated starts ⇒ zero gap. If the\\nenvironment is deterministic and every initial state appears in a\\ncomplete demonstration, the counting policy replays a demonstrated\\ntrajectory verbatim and its value gap is zero to floating-point\\nprecision. There is no compounding of errors, because no error is ever\\nmade on-path. Stochasticity or missing coverage ⇒ the gap is governed by leaving\\nthe demonstrated set. A slippery kernel (or an undemonstrated start)\\neventually pushes the agent onto states where the clone is uniform, and\\nfrom there value is lost at a rate the environment controls. Coverage\\nof initial states improves like (1 − 1/k)^m in the demonstration\\ncount m, which is why mean-gap curves against m on deterministic\\ngrids are straight lines of slope ≈ −1 on log-log axes. #![allow(unused)] fn main() {\\nuse imitation_lab::envs::{build_env, optimal_expert, EnvFamily, EnvSpec};\\nuse imitation_lab::datasets::collect_expert;\\nuse imitation_lab::bc::{bc_counting, CountingMode};\\nuse imitation_lab::mdp::policy_value; let mdp = build_env(&EnvSpec { family: EnvFamily::DetGrid, num_states: 12, num_actions: 4, horizon: 5, grid_width: Some(4), slip: None, num_initial_states: 4, seed: 9,\\n})?;\\nlet expert = optimal_expert(&mdp)?.policy; // Plenty of demonstrations: every start covered, gap exactly zero.\\nlet demos = collect_expert(&mdp, &expert, 40, 2)?;\\nlet cloned = bc_counting(&demos, mdp.dims(), CountingMode::PerTimeStep)?;\\nlet gap = policy_value(&mdp, &expert)? - policy_value(&mdp, &cloned)?;\\nassert!(gap.abs() < 1e-9); Ok::<(), imitation_lab::Error>(()) }","breadcrumbs":"Behavioral cloning » When cloning is exact, and when it drifts","id":"7","title":"When cloning is exact, and when it drifts"},"8":{"body":"The counting policy has one parameter per cell. To study estimation\\neffects — in particular what redundant features do — the crate also trains\\na linear-softmax policy by gradient descent on the penalized negative\\nlog-likelihood. FeatureTable::one_hot_with_noise appends random noise\\ndimensions to a one-hot state encoding; with more parameters than data,\\nunpenalized training can push weight onto noise coordinates and drift at\\nundemonstrated states, while an ‖θ‖² penalty (weight decay) keeps the\\nsolution near the counting answer. #![allow(unused)] fn main() {\\nuse imitation_lab::envs::{build_env, optimal_expert, EnvFamily, EnvSpec};\\nuse imitation_lab::datasets::collect_expert;\\nuse imitation_lab::bc::{bc_mle_train, FeatureTable, TrainConfig}; let mdp = build_env(&EnvSpec { family: EnvFamily::DetChain, num_states: 5, num_actions: 2, horizon: 4, grid_width: None, slip: None, num_initial_states: 2, seed: 4,\\n})?;\\nlet expert = optimal_expert(&mdp)?.policy;\\nlet demos = collect_expert(&mdp, &expert, 3, 6)?; let cfg = TrainConfig { learning_rate: 0.5, steps: 2_000, weight_decay: 1e-4, eval_every: 0,\\n};\\nlet features = FeatureTable::one_hot_with_noise(5, 15, 8); // 5 + 15 dims\\nlet (policy, _trace) = bc_mle_train(&demos, features, 2, &cfg, None)?;\\nassert_eq!(policy.features().dim(), 20); Ok::<(), imitation_lab::Error>(()) } The overfit-reg experiment in the next chapters runs exactly this\\ncomparison at scale and checks that the regularized arm wins.","breadcrumbs":"Behavioral cloning » Featurized training and overfitting","id":"8","title":"Featurized training and overfitting"},"9":{"body":"The second learner matches distributions instead of actions. It maintains\\ntwo tables: a potential ν(t, s, a) and policy logits, and plays a\\nminimax game — the potential ascends a log-mean-exp discrimination term,\\nthe policy descends it. At the saddle point the policy’s discounted\\noccupancy agrees with the demonstrator’s.","breadcrumbs":"The saddle-point objective » The saddle-point objective","id":"9","title":"The saddle-point objective"}},"length":24,"save":true},"fields":["title","body","breadcrumbs"],"index":{"body":{"root":{"0":{".":{".":{"3":{"df":2,"docs":{"12":{"tf":1.0},"4":{"tf":1.0}}},"4":{"df":1,"docs":{"4":{"tf":1.0}}},"5":{"df":1,"docs":{"4":{"tf":1.0}}},"6":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}},"0":{"df":4,"docs":{"10":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"4":{"tf":1.4142135623730951}}},"1":{"df":1,"docs":{"20":{"tf":1.0}}},"5":{"df":2,"docs":{"20":{"tf":1.0},"8":{"tf":1.0}}},"9":{"df":1,"docs":{"10":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":12,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":2.23606797749979},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"15":{"tf":2.23606797749979},"16":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.4142135623730951},"3":{"tf":1.0},"8":{"tf":1.0}}},"1":{",":{"2":{",":{"3":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},".":{"0":{")":{".":{"a":{"b":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"/":{"df":0,"docs":{},"k":{")":{"^":{"df":0,"docs":{},"m":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"0":{".":{"0":{")":{".":{"a":{"b":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"0":{"0":{"0":{"df":1,"docs":{"20":{"tf":1.0}}},"df":1,"docs":{"20":{"tf":1.0}}},"df":1,"docs":{"14":{"tf":1.0}}},"df":3,"docs":{"1":{"tf":1.0},"20":{"tf":1.4142135623730951},"3":{"tf":1.0}}},"1":{"df":2,"docs":{"16":{"tf":1.0},"4":{"tf":1.0}}},"2":{"df":3,"docs":{"15":{"tf":1.4142135623730951},"4":{"tf":1.0},"7":{"tf":1.0}}},"5":{"df":1,"docs":{"8":{"tf":1.4142135623730951}}},"7":{"df":1,"docs":{"20":{"tf":1.0}}},"df":11,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"12":{"tf":1.0},"15":{"tf":1.7320508075688772},"16":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.4142135623730951},"3":{"tf":1.7320508075688772},"6":{"tf":1.0},"7":{"tf":1.4142135623730951}},"e":{"df":7,"docs":{"1":{"tf":1.0},"15":{"tf":1.4142135623730951},"21":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.7320508075688772},"7":{"tf":1.0},"8":{"tf":1.0}}}},"2":{"0":{"0":{"df":1,"docs":{"16":{"tf":1.0}}},"2":{"1":{"df":1,"docs":{"20":{"tf":1.7320508075688772}}},"2":{"df":1,"docs":{"20":{"tf":1.0}}},"3":{"df":1,"docs":{"20":{"tf":1.0}}},"4":{"df":1,"docs":{"20":{"tf":1.0}}},"5":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}},"df":1,"docs":{"8":{"tf":1.0}}},"1":{"df":1,"docs":{"12":{"tf":1.0}}},"5":{"df":1,"docs":{"20":{"tf":1.4142135623730951}}},"9":{"df":1,"docs":{"20":{"tf":1.4142135623730951}}},"_":{"0":{"0":{"0":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":11,"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.7320508075688772},"12":{"tf":1.7320508075688772},"15":{"tf":1.7320508075688772},"16":{"tf":1.0},"20":{"tf":2.6457513110645907},"21":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.7320508075688772}},"h":{"df":1,"docs":{"15":{"tf":1.4142135623730951}}}},"3":{"^":{"4":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"df":9,"docs":{"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.4142135623730951},"8":{"tf":1.0}}},"4":{"0":{"df":1,"docs":{"7":{"tf":1.0}}},"_":{"0":{"0":{"0":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":9,"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.7320508075688772}}},"5":{"df":10,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"21":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.4142135623730951}}},"6":{"df":6,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"15":{"tf":1.0},"21":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}}},"7":{"df":2,"docs":{"1":{"tf":1.0},"16":{"tf":1.0}}},"8":{"1":{"df":1,"docs":{"16":{"tf":1.0}}},"df":4,"docs":{"15":{"tf":1.0},"20":{"tf":2.0},"6":{"tf":1.0},"8":{"tf":1.0}},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"20":{"tf":1.0}}}}},"9":{"df":4,"docs":{"1":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951}}},"_":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}},"r":{"a":{"c":{"df":0,"docs":{},"e":{"df":2,"docs":{"12":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"{":{"df":0,"docs":{},"s":{",":{"a":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"a":{"^":{"df":0,"docs":{},"h":{"df":1,"docs":{"16":{"tf":1.0}}}},"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"v":{"df":1,"docs":{"23":{"tf":1.0}}}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"b":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}}}}},"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":7,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"23":{"tf":1.7320508075688772}}}}},"o":{"df":0,"docs":{},"r":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"13":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"t":{"df":2,"docs":{"13":{"tf":1.0},"5":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":6,"docs":{"0":{"tf":1.0},"16":{"tf":1.4142135623730951},"2":{"tf":1.0},"3":{"tf":2.6457513110645907},"5":{"tf":1.4142135623730951},"9":{"tf":1.0}}}}},"u":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"17":{"tf":1.0}}}},"df":0,"docs":{}}}},"d":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"3":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":4,"docs":{"12":{"tf":1.0},"14":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"3":{"tf":1.0},"7":{"tf":1.0}}}}},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":2,"docs":{"22":{"tf":1.0},"6":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"e":{"df":2,"docs":{"17":{"tf":1.0},"9":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"(":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":11,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"3":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"a":{"d":{"df":0,"docs":{},"i":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":5,"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}}}}}},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"df":3,"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"21":{"tf":1.0}}}},"df":0,"docs":{}}},"m":{"df":1,"docs":{"8":{"tf":1.0}}},"r":{"a":{"df":0,"docs":{},"y":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}}},"s":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"df":0,"docs":{},"k":{"df":1,"docs":{"15":{"tf":1.0}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"!":{"(":{"(":{"0":{".":{"0":{".":{".":{"=":{"1":{"0":{".":{"0":{")":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"(":{"&":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"15":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"y":{"_":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"(":{"&":{"df":0,"docs":{},"m":{"d":{"df":0,"docs":{},"p":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"s":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}}}},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"o":{"c":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"p":{"df":1,"docs":{"4":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":1,"docs":{"16":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"15":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"p":{".":{"a":{"b":{"df":2,"docs":{"1":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"m":{"a":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"!":{"(":{"df":0,"docs":{},"o":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"(":{"&":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"20":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"!":{"(":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"_":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"c":{"_":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"16":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"f":{"df":0,"docs":{},"g":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"20":{"tf":1.0}}}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"d":{".":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"(":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"y":{".":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"(":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"(":{")":{".":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"8":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":2,"docs":{"16":{"tf":1.7320508075688772},"4":{"tf":1.0}}}}}}},"t":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"14":{"tf":1.0}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"17":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"v":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"20":{"tf":1.0}}}}},"df":0,"docs":{}},"x":{"df":1,"docs":{"7":{"tf":1.0}}}},"b":{"a":{"c":{"df":0,"docs":{},"k":{"df":3,"docs":{"13":{"tf":1.0},"18":{"tf":1.0},"5":{"tf":1.0}},"w":{"a":{"df":0,"docs":{},"r":{"d":{"df":2,"docs":{"3":{"tf":1.0},"4":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}},"t":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"13":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"c":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"(":{"&":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":5,"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"(":{"&":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":1,"docs":{"8":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":1,"docs":{"21":{"tf":1.4142135623730951}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"16":{"tf":1.0},"21":{"tf":1.0}}}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":1,"docs":{"4":{"tf":1.0}},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"10":{"tf":1.0}}}}},"h":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":3,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"3":{"tf":1.4142135623730951}}}}}}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"df":3,"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"13":{"tf":1.0}}}},"df":0,"docs":{}}}},"t":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":3,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0}}}}}}},"y":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"16":{"tf":1.0},"4":{"tf":1.0}}},"df":0,"docs":{}}}}},"i":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"18":{"tf":1.0}}}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"o":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"1":{"tf":1.0}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":4,"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"21":{"tf":1.4142135623730951},"23":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"15":{"tf":1.0},"23":{"tf":1.0}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"13":{"tf":1.4142135623730951}}}}}},"i":{"df":0,"docs":{},"l":{"d":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"(":{"&":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":10,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":1,"docs":{"3":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}}},"y":{"df":1,"docs":{"13":{"tf":1.0}}}},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"22":{"tf":1.7320508075688772}}}}}},"c":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":2,"docs":{"13":{"tf":1.0},"19":{"tf":1.0}}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"o":{"df":1,"docs":{"23":{"tf":1.4142135623730951}}}},"l":{"df":0,"docs":{},"o":{"df":1,"docs":{"0":{"tf":1.0}}}},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":7,"docs":{"11":{"tf":1.4142135623730951},"12":{"tf":1.0},"16":{"tf":1.7320508075688772},"21":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"8":{"tf":1.0}}}},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}},"i":{"df":0,"docs":{},"f":{"df":4,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"16":{"tf":1.0},"22":{"tf":1.0}},"i":{"df":2,"docs":{"17":{"tf":1.0},"21":{"tf":1.0}}},"y":{"_":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"(":{"&":{"df":0,"docs":{},"m":{"d":{"df":0,"docs":{},"p":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":1,"docs":{"16":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}}}}}},"f":{"df":0,"docs":{},"g":{"df":2,"docs":{"20":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}}}},"h":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"8":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"l":{"df":1,"docs":{"21":{"tf":1.0}}}}}}},"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.4142135623730951}}}},"df":0,"docs":{}},"df":12,"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"19":{"tf":1.7320508075688772},"20":{"tf":1.7320508075688772},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.7320508075688772},"3":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"i":{"df":1,"docs":{"19":{"tf":1.0}}},"l":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":3,"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":1,"docs":{"21":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":9,"docs":{"0":{"tf":1.0},"1":{"tf":1.7320508075688772},"11":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.4142135623730951},"3":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.7320508075688772}}}},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"14":{"tf":1.4142135623730951}},"r":{"df":1,"docs":{"15":{"tf":1.0}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":2,"docs":{"1":{"tf":1.0},"19":{"tf":1.0}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"(":{"&":{"df":0,"docs":{},"m":{"d":{"df":0,"docs":{},"p":{"df":8,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":1,"docs":{"6":{"tf":1.0}}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"m":{"df":0,"docs":{},"e":{"df":1,"docs":{"3":{"tf":1.0}}},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"0":{"tf":1.0},"19":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"p":{"a":{"df":0,"docs":{},"r":{"df":3,"docs":{"11":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0}},"e":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"l":{"df":2,"docs":{"21":{"tf":1.0},"22":{"tf":1.0}}}}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"0":{"tf":1.0},"8":{"tf":1.0}}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}}}}}}}},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"1":{"tf":1.0}}}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":7,"docs":{"10":{"tf":1.7320508075688772},"13":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":2.0},"6":{"tf":1.0},"7":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"3":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"t":{"df":6,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"4":{"tf":1.0}},"e":{"_":{"df":0,"docs":{},"o":{"c":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"y":{"(":{"&":{"df":0,"docs":{},"m":{"d":{"df":0,"docs":{},"p":{"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"n":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":3,"docs":{"19":{"tf":1.0},"22":{"tf":1.0},"5":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{",":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"d":{",":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"c":{",":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":1,"docs":{"22":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"l":{"df":2,"docs":{"19":{"tf":1.4142135623730951},"22":{"tf":1.0}}}}}}},"df":5,"docs":{"0":{"tf":1.4142135623730951},"19":{"tf":1.7320508075688772},"21":{"tf":1.4142135623730951},"22":{"tf":1.4142135623730951},"23":{"tf":1.0}},"s":{"/":{"b":{"c":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"b":{"df":0,"docs":{},"s":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"22":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"18":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}}},"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":1,"docs":{"10":{"tf":1.0}}}},"r":{"df":0,"docs":{},"v":{"df":1,"docs":{"15":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}}},"t":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"r":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"10":{"tf":1.0},"8":{"tf":1.0}}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"g":{"df":0,"docs":{},"o":{"(":{"&":{"df":0,"docs":{},"m":{"d":{"df":0,"docs":{},"p":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":1,"docs":{"15":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}}}},"df":2,"docs":{"15":{"tf":1.4142135623730951},"3":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":14,"docs":{"0":{"tf":1.7320508075688772},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"15":{"tf":1.7320508075688772},"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":2.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{".":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"(":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"15":{"tf":1.0}}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"d":{"df":5,"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"e":{":":{":":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":5,"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}}}}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"g":{"df":2,"docs":{"0":{"tf":1.0},"7":{"tf":1.4142135623730951}}}},"df":2,"docs":{"3":{"tf":1.0},"7":{"tf":1.0}}}}}},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"8":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"a":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":3,"docs":{"14":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"v":{"df":1,"docs":{"18":{"tf":1.0}}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"v":{"df":1,"docs":{"7":{"tf":1.0}}}}},"y":{"c":{"df":0,"docs":{},"l":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}}},"d":{"_":{"df":1,"docs":{"15":{"tf":1.0}},"π":{"(":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}}},"a":{"df":0,"docs":{},"t":{"a":{"df":4,"docs":{"10":{"tf":2.23606797749979},"17":{"tf":1.0},"21":{"tf":1.7320508075688772},"8":{"tf":1.0}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.0},"10":{"tf":2.0},"15":{"tf":1.0},"6":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"c":{"a":{"df":0,"docs":{},"y":{"df":4,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"21":{"tf":1.4142135623730951},"8":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":2,"docs":{"0":{"tf":1.0},"2":{"tf":1.0}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":2,"docs":{"11":{"tf":1.0},"12":{"tf":1.0}}}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}}}}},"m":{"df":0,"docs":{},"o":{"df":8,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"’":{"df":4,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}}}}}}},"df":13,"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":2.23606797749979},"3":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":2.449489742783178}}}}}}}},"n":{"df":0,"docs":{},"s":{"df":1,"docs":{"2":{"tf":1.0}}}},"s":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{},"t":{"df":2,"docs":{"12":{"tf":1.0},"8":{"tf":1.0}},"–":{"a":{"df":0,"docs":{},"s":{"c":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":1,"docs":{"3":{"tf":1.4142135623730951}}}}}},"t":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"l":{"df":2,"docs":{"0":{"tf":1.0},"21":{"tf":1.0}}}}}}},"_":{"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"20":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}}}}},"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":2,"docs":{"13":{"tf":1.0},"22":{"tf":1.0}}}}},"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"3":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":1,"docs":{"21":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":8,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951},"3":{"tf":2.0},"6":{"tf":1.0},"7":{"tf":1.7320508075688772}}}}}}}}}},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}}}}}},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"13":{"tf":1.0},"17":{"tf":1.4142135623730951}}}}}},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}},"m":{"df":1,"docs":{"8":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":3,"docs":{"16":{"tf":1.0},"21":{"tf":1.0},"8":{"tf":1.0}}}}}},"r":{"df":1,"docs":{"19":{"tf":1.7320508075688772}},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"23":{"tf":1.0}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"18":{"tf":1.0},"19":{"tf":1.7320508075688772}}}}}}},"df":0,"docs":{}}},"s":{"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":2,"docs":{"14":{"tf":1.0},"4":{"tf":1.0}}}}}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":4,"docs":{"10":{"tf":1.7320508075688772},"17":{"tf":1.0},"21":{"tf":1.0},"9":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"13":{"tf":1.0},"9":{"tf":1.0}}}}}}}},"df":0,"docs":{},"k":{"df":1,"docs":{"20":{"tf":1.0}}},"t":{"a":{"df":0,"docs":{},"n":{"c":{"df":2,"docs":{"0":{"tf":1.0},"15":{"tf":1.7320508075688772}}},"df":0,"docs":{}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":9,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}}}}},"df":0,"docs":{}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":2,"docs":{"12":{"tf":1.0},"14":{"tf":1.0}}}}}}},"o":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"’":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}}},"t":{"df":1,"docs":{"19":{"tf":1.0}}},"w":{"df":0,"docs":{},"n":{"df":2,"docs":{"17":{"tf":1.0},"3":{"tf":1.4142135623730951}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"m":{"df":2,"docs":{"0":{"tf":1.0},"2":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}},"r":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"3":{"tf":1.0}}},"w":{"df":0,"docs":{},"n":{"df":2,"docs":{"13":{"tf":1.0},"3":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":2,"docs":{"1":{"tf":1.0},"8":{"tf":1.0}}}},"v":{"df":0,"docs":{},"e":{"df":2,"docs":{"14":{"tf":1.0},"23":{"tf":1.0}},"n":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"p":{"df":2,"docs":{"10":{"tf":1.0},"15":{"tf":1.0}}}}},"u":{"a":{"df":0,"docs":{},"l":{"df":2,"docs":{"14":{"tf":1.0},"21":{"tf":1.0}}}},"df":0,"docs":{}},"v":{"_":{"d":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":1,"docs":{"14":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":2,"docs":{"20":{"tf":2.0},"21":{"tf":1.0}}},"y":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"m":{"df":2,"docs":{"1":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}}},"̂":{"_":{"df":0,"docs":{},"e":{"(":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"p":{"[":{"df":0,"docs":{},"x":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}},"q":{"[":{"df":0,"docs":{},"e":{"^":{"df":0,"docs":{},"x":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"{":{"a":{"\'":{"df":0,"docs":{},"~":{"df":0,"docs":{},"π":{"(":{"df":0,"docs":{},"·":{"df":0,"docs":{},"|":{"df":0,"docs":{},"t":{"+":{"1":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}}},"a":{"c":{"df":0,"docs":{},"h":{"df":11,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"3":{"tf":1.4142135623730951}}}}},"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"6":{"tf":1.0}}}}}}}}},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"15":{"tf":1.0},"5":{"tf":1.0}},"i":{"c":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"c":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"y":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"(":{"&":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":1,"docs":{"15":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"n":{"c":{"df":0,"docs":{},"o":{"d":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}}},"d":{"df":2,"docs":{"19":{"tf":1.7320508075688772},"3":{"tf":1.0}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":1,"docs":{"15":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.4142135623730951}}}}}},"v":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"d":{"=":{"9":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":1,"docs":{"20":{"tf":1.7320508075688772}},"f":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":10,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}},"y":{":":{":":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":5,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"15":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":3,"docs":{"12":{"tf":1.0},"16":{"tf":1.0},"4":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":1,"docs":{"3":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":8,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"13":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.4142135623730951}}}}}},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":10,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{}}}}}},"p":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"d":{"df":2,"docs":{"0":{"tf":1.0},"2":{"tf":1.0}}},"df":0,"docs":{}}}}},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"l":{"df":4,"docs":{"15":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}},"r":{"df":0,"docs":{},"r":{"(":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{":":{":":{"d":{"a":{"df":0,"docs":{},"t":{"a":{"(":{"_":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":6,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"17":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.4142135623730951}}}}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":4,"docs":{"0":{"tf":1.4142135623730951},"17":{"tf":1.0},"5":{"tf":1.7320508075688772},"8":{"tf":1.0}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":3,"docs":{"12":{"tf":1.0},"20":{"tf":1.0},"8":{"tf":1.0}}}}}}}},"df":0,"docs":{},"u":{"df":7,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"16":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":1,"docs":{"7":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":4,"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0}}}}}}},"i":{"d":{"df":2,"docs":{"16":{"tf":1.0},"22":{"tf":1.0}}},"df":0,"docs":{}}},"x":{"a":{"c":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":10,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"13":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"19":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}}},"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"13":{"tf":1.0}}}}},"df":0,"docs":{}}},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.4142135623730951}}}},"p":{"df":4,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"14":{"tf":1.0},"9":{"tf":1.0}},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":1,"docs":{"11":{"tf":1.0}}}},"r":{"df":0,"docs":{},"i":{"df":11,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":2.0},"22":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"(":{"df":0,"docs":{},"r":{"df":1,"docs":{"20":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}}}},"t":{".":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"(":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":12,"docs":{"1":{"tf":1.7320508075688772},"10":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"2":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.4142135623730951},"6":{"tf":1.7320508075688772},"7":{"tf":1.7320508075688772},"8":{"tf":1.4142135623730951}}}}},"l":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"10":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}},"df":0,"docs":{}}}}}},"f":{"a":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"19":{"tf":1.0}},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"1":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"l":{"df":2,"docs":{"3":{"tf":1.0},"5":{"tf":1.0}}},"s":{"df":2,"docs":{"10":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951}}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":12,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.7320508075688772},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":4,"docs":{"0":{"tf":1.4142135623730951},"17":{"tf":1.0},"21":{"tf":1.0},"8":{"tf":1.7320508075688772}},"e":{"df":0,"docs":{},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{":":{":":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"_":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"8":{"tf":1.0}},"e":{"(":{"5":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":1,"docs":{"8":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":3,"docs":{"18":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0}}}},"n":{"a":{"df":0,"docs":{},"l":{"df":2,"docs":{"1":{"tf":1.0},"10":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":1,"docs":{"10":{"tf":1.0}}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":2,"docs":{"18":{"tf":1.0},"19":{"tf":1.0}}}},"t":{"df":4,"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}}},"l":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{},"o":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}},"n":{"df":11,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}},"o":{"df":0,"docs":{},"r":{"c":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":3,"docs":{"10":{"tf":1.0},"14":{"tf":1.4142135623730951},"3":{"tf":1.0}}},"w":{"a":{"df":0,"docs":{},"r":{"d":{"df":2,"docs":{"15":{"tf":1.0},"4":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"c":{"df":3,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"5":{"tf":1.0}}},"df":0,"docs":{}}}}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":2,"docs":{"15":{"tf":1.0},"16":{"tf":1.0}}}},"n":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"14":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"g":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":4,"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"9":{"tf":1.0}}},"m":{"a":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}}},"p":{"df":4,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"21":{"tf":1.4142135623730951},"7":{"tf":2.449489742783178}}},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"19":{"tf":1.0}}}}},"d":{"a":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"s":{"=":{"2":{"0":{"0":{"0":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"12":{"tf":1.4142135623730951}}}}}}}},"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":3,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"o":{"d":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"r":{"a":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":5,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"8":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"d":{"_":{"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":10,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":3,"docs":{"21":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"1":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}},"h":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"1":{"tf":1.0}}}},"df":2,"docs":{"16":{"tf":1.0},"2":{"tf":1.0}},"e":{"a":{"d":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"15":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"z":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":12,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.4142135623730951},"2":{"tf":1.0},"20":{"tf":1.7320508075688772},"3":{"tf":1.7320508075688772},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}}}}},"t":{"df":1,"docs":{"8":{"tf":1.0}}}},"u":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}}}},"i":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0}}}}}},"df":0,"docs":{},"l":{"a":{"b":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}}}},"df":3,"docs":{"0":{"tf":1.7320508075688772},"18":{"tf":1.0},"19":{"tf":1.7320508075688772}}},"df":0,"docs":{}},"df":0,"docs":{}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"l":{"a":{"b":{":":{":":{"b":{"c":{":":{":":{"df":0,"docs":{},"{":{"b":{"c":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":5,"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"8":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{":":{":":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":5,"docs":{"1":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{},"{":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":3,"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"6":{"tf":1.0}}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"{":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"df":10,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":11,"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}}}},"x":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":1,"docs":{"20":{"tf":1.4142135623730951}}}}}}}},"df":0,"docs":{}}}}}}}}}}},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"20":{"tf":1.0}}}}}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}}}},"m":{"a":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{":":{":":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"y":{"_":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"16":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{},"{":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"g":{"df":0,"docs":{},"o":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"d":{"df":0,"docs":{},"p":{":":{":":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":1,"docs":{"15":{"tf":1.0}}},"y":{"_":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":3,"docs":{"1":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"{":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"o":{"c":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"p":{"df":1,"docs":{"4":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"e":{":":{":":{"df":0,"docs":{},"{":{"df":0,"docs":{},"g":{"d":{"a":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"12":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":2,"docs":{"0":{"tf":1.4142135623730951},"5":{"tf":1.0}}}},"m":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"v":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"11":{"tf":1.0},"4":{"tf":1.0}}},"df":0,"docs":{}}}},"x":{"df":2,"docs":{"2":{"tf":1.4142135623730951},"3":{"tf":1.0}}}},"u":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"3":{"tf":1.0},"4":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}}}}}},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":2,"docs":{"2":{"tf":1.0},"7":{"tf":1.4142135623730951}}}}},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"n":{"c":{"df":4,"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"3":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"a":{"d":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"13":{"tf":1.7320508075688772},"17":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"n":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"23":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"f":{"df":1,"docs":{"4":{"tf":1.0}}}}}}}},"k":{".":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"=":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":1,"docs":{"19":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":2,"docs":{"20":{"tf":1.0},"8":{"tf":1.0}}}},"r":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":3,"docs":{"13":{"tf":1.0},"2":{"tf":1.0},"7":{"tf":1.0}}}}}},"y":{"df":2,"docs":{"19":{"tf":1.0},"20":{"tf":1.0}}}},"l":{"(":{"df":0,"docs":{},"p":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":2,"docs":{"14":{"tf":1.4142135623730951},"21":{"tf":1.0}}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"l":{"1":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"(":{"&":{"df":0,"docs":{},"m":{"d":{"df":0,"docs":{},"p":{"df":1,"docs":{"15":{"tf":1.7320508075688772}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":1,"docs":{"15":{"tf":1.4142135623730951}}}}}}},"df":1,"docs":{"21":{"tf":1.0}}},"a":{"b":{"df":1,"docs":{"0":{"tf":1.0}},"o":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"21":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"y":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"1":{"tf":1.0},"23":{"tf":1.0}}}}}},"df":1,"docs":{"10":{"tf":1.0}},"e":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":2,"docs":{"0":{"tf":1.4142135623730951},"5":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"9":{"tf":1.0}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"_":{"df":0,"docs":{},"r":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"v":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}},"n":{"df":1,"docs":{"15":{"tf":1.0}},"s":{"df":1,"docs":{"17":{"tf":1.0}}}},"t":{"df":1,"docs":{"17":{"tf":1.0}}}},"i":{"b":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":4,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"d":{"df":5,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{}}}}}}}},"n":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"13":{"tf":1.0},"8":{"tf":1.0}}}},"df":5,"docs":{"0":{"tf":1.0},"19":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"3":{"tf":1.0},"7":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}},"v":{"df":0,"docs":{},"e":{"df":2,"docs":{"0":{"tf":1.0},"15":{"tf":1.0}}}}},"o":{"c":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"g":{"(":{"df":0,"docs":{},"p":{"/":{"df":0,"docs":{},"q":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}},"df":9,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"16":{"tf":1.0},"21":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"i":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"9":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"k":{"df":1,"docs":{"10":{"tf":1.0}}},"p":{"df":2,"docs":{"13":{"tf":1.0},"3":{"tf":1.7320508075688772}}}},"s":{"df":0,"docs":{},"s":{"df":6,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.7320508075688772},"16":{"tf":2.0}},"k":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"d":{":":{":":{"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"0":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}}}}},"t":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"m":{"a":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"0":{"tf":1.0},"18":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":11,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"t":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"9":{"tf":1.0}}}}},"df":0,"docs":{}}}},"k":{"df":0,"docs":{},"e":{"df":3,"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0}}}},"n":{"df":0,"docs":{},"i":{"df":3,"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0}}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.4142135623730951}}}}}},"t":{"c":{"df":0,"docs":{},"h":{"df":5,"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.0},"12":{"tf":1.0},"21":{"tf":1.0},"9":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"17":{"tf":1.0},"21":{"tf":1.0}}}}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"13":{"tf":1.0}}}}}},"x":{"df":2,"docs":{"10":{"tf":1.0},"19":{"tf":1.0}},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":3,"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"5":{"tf":1.0}}}}}}}},"d":{"df":0,"docs":{},"p":{".":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":5,"docs":{"1":{"tf":1.0},"12":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"7":{"tf":1.0}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"a":{"df":0,"docs":{},"r":{"d":{"(":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":10,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.4142135623730951},"15":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}},"df":2,"docs":{"20":{"tf":1.0},"7":{"tf":1.4142135623730951}},"e":{"a":{"df":0,"docs":{},"n":{"df":7,"docs":{"0":{"tf":1.0},"10":{"tf":2.0},"14":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"13":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":4,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0}}}}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"d":{"df":2,"docs":{"0":{"tf":1.0},"17":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"i":{"c":{"df":2,"docs":{"19":{"tf":1.0},"20":{"tf":1.0}}},"df":0,"docs":{}}}}},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}}}}}}},"n":{"df":1,"docs":{"19":{"tf":1.0}},"i":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":3,"docs":{"0":{"tf":1.0},"14":{"tf":1.4142135623730951},"16":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"s":{"df":2,"docs":{"21":{"tf":1.0},"7":{"tf":1.0}}},"t":{"a":{"df":0,"docs":{},"k":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}}},"x":{"df":2,"docs":{"0":{"tf":1.0},"13":{"tf":1.4142135623730951}},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"13":{"tf":1.0}}}}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"1":{"tf":1.0}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"8":{"tf":1.0}}}},"v":{"df":0,"docs":{},"e":{"df":1,"docs":{"3":{"tf":1.4142135623730951}}}}},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.4142135623730951}}}}},"n":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":2,"docs":{"22":{"tf":1.0},"23":{"tf":1.0}}}}},"df":1,"docs":{"23":{"tf":1.0}},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{},"e":{"d":{"df":3,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"20":{"tf":1.0}}},"df":0,"docs":{}},"g":{"df":1,"docs":{"8":{"tf":1.0}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"3":{"tf":1.4142135623730951}}}}},"x":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.0},"8":{"tf":1.0}}}}},"o":{"c":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":3,"docs":{"17":{"tf":1.0},"21":{"tf":1.0},"8":{"tf":1.4142135623730951}}}},"n":{"df":1,"docs":{"12":{"tf":1.0}},"e":{"df":10,"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"12":{"tf":2.0},"15":{"tf":1.4142135623730951},"16":{"tf":1.7320508075688772},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.7320508075688772}}},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":1,"docs":{"19":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"l":{"df":2,"docs":{"15":{"tf":1.0},"23":{"tf":1.0}}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"0":{"tf":1.0}}}}},"u":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"r":{"df":1,"docs":{"20":{"tf":1.0}}}}},"df":0,"docs":{},"m":{"_":{"a":{"c":{"df":0,"docs":{},"t":{"df":11,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.7320508075688772},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":12,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.7320508075688772},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":11,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.7320508075688772},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{}}}},"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"12":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"o":{"b":{"df":0,"docs":{},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":6,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"10":{"tf":1.7320508075688772},"11":{"tf":1.0},"13":{"tf":1.4142135623730951},"21":{"tf":1.7320508075688772}}}},"df":0,"docs":{}}}},"c":{"c":{".":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"b":{"(":{"df":0,"docs":{},"t":{"df":1,"docs":{"4":{"tf":1.4142135623730951}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":1,"docs":{"4":{"tf":1.0}},"u":{"df":0,"docs":{},"p":{"df":9,"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"15":{"tf":1.4142135623730951},"17":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.7320508075688772},"9":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":3,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"21":{"tf":1.0}},"e":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"(":{"&":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}}},"k":{"df":12,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}}},"n":{"df":9,"docs":{"0":{"tf":1.0},"12":{"tf":1.4142135623730951},"14":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.4142135623730951},"21":{"tf":1.7320508075688772},"23":{"tf":1.0},"3":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"’":{"df":1,"docs":{"15":{"tf":1.0}}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"13":{"tf":1.0},"21":{"tf":1.4142135623730951}},"e":{"_":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"13":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"t":{"df":0,"docs":{},"o":{"df":3,"docs":{"3":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}},"w":{"a":{"df":0,"docs":{},"r":{"d":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"(":{"&":{"df":0,"docs":{},"m":{"d":{"df":0,"docs":{},"p":{")":{"?":{".":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":9,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":10,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}}}}}}},"df":0,"docs":{}}},"df":8,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.4142135623730951}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"’":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"0":{"tf":1.0},"12":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"t":{"df":5,"docs":{"0":{"tf":1.0},"19":{"tf":1.7320508075688772},"20":{"tf":1.0},"21":{"tf":1.0},"6":{"tf":1.0}},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":2,"docs":{"18":{"tf":1.0},"19":{"tf":1.4142135623730951}}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":9,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.7320508075688772},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0},"6":{"tf":1.0}},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"8":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"19":{"tf":2.23606797749979}}},"df":0,"docs":{}}}}}}},"p":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":4,"docs":{"14":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.0}}}},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"8":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"s":{"/":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":2,"docs":{"0":{"tf":1.0},"22":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":2,"docs":{"19":{"tf":1.4142135623730951},"23":{"tf":1.0}}}},"t":{"df":0,"docs":{},"h":{"df":3,"docs":{"19":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"8":{"tf":1.0}},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"8":{"tf":1.0}}}}}},"df":0,"docs":{}},"r":{"df":8,"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}},"f":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}}}}},"i":{"df":0,"docs":{},"n":{"df":4,"docs":{"16":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0}}}},"l":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}},"y":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"u":{"df":3,"docs":{"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0}}}},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":7,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"11":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":15,"docs":{"0":{"tf":2.6457513110645907},"10":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"16":{"tf":2.0},"17":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.7320508075688772},"5":{"tf":1.4142135623730951},"6":{"tf":1.7320508075688772},"7":{"tf":1.0},"8":{"tf":1.7320508075688772},"9":{"tf":1.4142135623730951}}},"y":{"\'":{"df":1,"docs":{"12":{"tf":1.0}}},")":{"?":{")":{".":{"a":{"b":{"df":1,"docs":{"4":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},":":{":":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"(":{"df":0,"docs":{},"m":{"d":{"df":0,"docs":{},"p":{".":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"r":{"df":1,"docs":{"20":{"tf":1.0}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":1,"docs":{"4":{"tf":1.4142135623730951}},"e":{"(":{"&":{"df":0,"docs":{},"m":{"d":{"df":0,"docs":{},"p":{"df":3,"docs":{"1":{"tf":1.4142135623730951},"4":{"tf":1.0},"7":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"’":{"df":3,"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"9":{"tf":1.0}}}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":5,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}}}}}}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"e":{"d":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"7":{"tf":1.0}}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"19":{"tf":1.4142135623730951},"23":{"tf":1.0}}}}},"o":{"b":{"a":{"b":{"df":0,"docs":{},"l":{"df":3,"docs":{"3":{"tf":1.7320508075688772},"4":{"tf":1.4142135623730951},"5":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":3,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"u":{"c":{"df":1,"docs":{"22":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}}},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":3,"docs":{"13":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}},"t":{"df":1,"docs":{"3":{"tf":1.0}}}}},"q":{"df":1,"docs":{"14":{"tf":1.0}},"u":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"4":{"tf":1.0}}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"15":{"tf":1.0},"3":{"tf":1.0}}}}}}}}}},"r":{"a":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":8,"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.7320508075688772},"21":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.7320508075688772},"8":{"tf":1.0}}}}},"df":1,"docs":{"19":{"tf":1.0}}},"t":{"df":0,"docs":{},"e":{"df":2,"docs":{"20":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"a":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"3":{"tf":1.0}}}},"d":{"a":{"b":{"df":0,"docs":{},"l":{"df":2,"docs":{"18":{"tf":1.0},"22":{"tf":1.0}}}},"df":0,"docs":{}},"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"d":{"df":2,"docs":{"16":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}},"v":{"df":3,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"21":{"tf":1.0}}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":2,"docs":{"15":{"tf":1.0},"4":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"l":{"df":1,"docs":{"21":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"0":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{}}}},"df":3,"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"22":{"tf":1.0}},"f":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":5,"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"21":{"tf":1.0},"4":{"tf":1.0}}}}},"g":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"l":{"df":1,"docs":{"21":{"tf":1.0}}}}}}},"a":{"df":0,"docs":{},"r":{"d":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"3":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":1,"docs":{"8":{"tf":1.0}},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}}}},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"10":{"tf":1.0},"20":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"o":{"c":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}}},"m":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"3":{"tf":1.0}}}}},"df":0,"docs":{}},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"y":{"df":3,"docs":{"0":{"tf":1.0},"13":{"tf":1.7320508075688772},"7":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"_":{"*":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"x":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":4,"docs":{"12":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"14":{"tf":1.0}}}}}}},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":3,"docs":{"0":{"tf":1.0},"22":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"_":{"c":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":1,"docs":{"20":{"tf":1.0}}}}}}},"df":0,"docs":{}},"c":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":1,"docs":{"3":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"v":{"df":3,"docs":{"0":{"tf":1.0},"19":{"tf":1.0},"22":{"tf":1.0}}}}},"t":{"df":1,"docs":{"1":{"tf":1.0}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0}},"s":{".":{"c":{"df":0,"docs":{},"s":{"df":0,"docs":{},"v":{"df":1,"docs":{"22":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":3,"docs":{"20":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}}}}}},"w":{"a":{"df":0,"docs":{},"r":{"d":{"df":3,"docs":{"2":{"tf":1.0},"3":{"tf":2.449489742783178},"4":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":1,"docs":{"6":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"t":{"df":1,"docs":{"4":{"tf":1.0}}}},"w":{"df":4,"docs":{"16":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"20":{"tf":1.0}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"(":{"&":{"c":{"df":0,"docs":{},"f":{"df":0,"docs":{},"g":{"df":1,"docs":{"20":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}}}},"df":11,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"12":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":2.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"4":{"tf":1.0},"8":{"tf":1.0}},"n":{"a":{"b":{"df":0,"docs":{},"l":{"df":2,"docs":{"18":{"tf":1.0},"22":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.7320508075688772}}}}},"s":{"/":{"<":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"19":{"tf":1.0}}}}}}}}},"df":0,"docs":{},"s":{"c":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.7320508075688772}}}},"df":0,"docs":{}},"df":0,"docs":{},"u":{"b":{"df":0,"docs":{},"s":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"22":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"s":{"\'":{")":{"df":0,"docs":{},"}":{"[":{"df":0,"docs":{},"ν":{"(":{"df":0,"docs":{},"t":{"+":{"1":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"a":{"d":{"d":{"df":0,"docs":{},"l":{"df":7,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"11":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"9":{"tf":1.0}},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{":":{":":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"(":{"df":0,"docs":{},"m":{"d":{"df":0,"docs":{},"p":{".":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":2,"docs":{"10":{"tf":1.0},"12":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":2,"docs":{"10":{"tf":1.0},"12":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":2,"docs":{"20":{"tf":1.4142135623730951},"22":{"tf":1.7320508075688772}}},"p":{"df":0,"docs":{},"l":{"df":2,"docs":{"13":{"tf":1.0},"16":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"3":{"tf":1.0}}}}}},"c":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"21":{"tf":1.0},"8":{"tf":1.0}}}}},"df":0,"docs":{}},"df":7,"docs":{"10":{"tf":1.4142135623730951},"12":{"tf":1.7320508075688772},"15":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":2.23606797749979},"6":{"tf":2.23606797749979},"9":{"tf":1.0}},"e":{"a":{"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"20":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"d":{"df":17,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.7320508075688772},"13":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.7320508075688772},"20":{"tf":2.449489742783178},"21":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}},"df":1,"docs":{"13":{"tf":1.0}},"n":{".":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"d":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"(":{"df":0,"docs":{},"t":{"df":2,"docs":{"12":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":2,"docs":{"12":{"tf":1.0},"6":{"tf":1.0}}}},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}}},"t":{"df":6,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"h":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":2,"docs":{"10":{"tf":1.0},"23":{"tf":1.0}}}},"p":{"df":1,"docs":{"23":{"tf":1.0}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"w":{"df":1,"docs":{"23":{"tf":1.0}}}}},"i":{"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"13":{"tf":1.0}}}},"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"1":{"tf":1.0},"16":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"17":{"tf":1.0}}}},"df":0,"docs":{}}}}},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"l":{"df":3,"docs":{"16":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0}}}}},"x":{"df":1,"docs":{"23":{"tf":1.0}}}},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"e":{"df":2,"docs":{"15":{"tf":2.23606797749979},"4":{"tf":1.7320508075688772}}}},"df":0,"docs":{},"p":{"df":10,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"3":{"tf":2.449489742783178},"4":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":4,"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":2,"docs":{"21":{"tf":1.0},"7":{"tf":1.0}}}}}},"m":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":2,"docs":{"0":{"tf":1.4142135623730951},"2":{"tf":1.0}}}}},"df":0,"docs":{}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"1":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}}}},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":2,"docs":{"17":{"tf":1.0},"8":{"tf":1.0}}}},"v":{"df":1,"docs":{"3":{"tf":1.0}}}},"m":{"df":0,"docs":{},"e":{"(":{"0":{".":{"2":{"df":1,"docs":{"3":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"4":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"p":{"a":{"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}}},"t":{"a":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"10":{"tf":1.0}}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":1,"docs":{"3":{"tf":1.0}}}},"r":{"df":0,"docs":{},"t":{"df":3,"docs":{"1":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.7320508075688772}}}},"t":{"df":0,"docs":{},"e":{"df":8,"docs":{"10":{"tf":2.23606797749979},"12":{"tf":1.4142135623730951},"16":{"tf":1.0},"2":{"tf":1.4142135623730951},"3":{"tf":2.0},"5":{"tf":1.0},"7":{"tf":1.7320508075688772},"8":{"tf":1.4142135623730951}},"–":{"a":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"y":{"df":1,"docs":{"3":{"tf":1.4142135623730951}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":8,"docs":{"10":{"tf":2.0},"12":{"tf":1.7320508075688772},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.0},"6":{"tf":1.4142135623730951},"8":{"tf":1.0}}}},"o":{"c":{"df":0,"docs":{},"h":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"l":{"df":1,"docs":{"21":{"tf":1.0}}}}}}},"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":3,"docs":{"16":{"tf":1.4142135623730951},"3":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.4142135623730951}},"l":{"df":0,"docs":{},"i":{"df":2,"docs":{"0":{"tf":1.0},"21":{"tf":1.4142135623730951}}}}}},"df":0,"docs":{}},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}}},"u":{"d":{"df":0,"docs":{},"i":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"20":{"tf":1.0},"8":{"tf":1.0}}}},"df":0,"docs":{}},"y":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"u":{"b":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"l":{"df":1,"docs":{"21":{"tf":1.0}}}}}}},"df":1,"docs":{"13":{"tf":1.0}},"s":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":3,"docs":{"10":{"tf":1.0},"20":{"tf":1.4142135623730951},"21":{"tf":1.0}},"e":{"(":{"&":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"10":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":3,"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"17":{"tf":1.0}}}},"m":{"df":2,"docs":{"15":{"tf":1.0},"4":{"tf":1.0}},"m":{"a":{"df":0,"docs":{},"r":{"df":3,"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.4142135623730951}},"y":{".":{"c":{"df":0,"docs":{},"s":{"df":0,"docs":{},"v":{"df":1,"docs":{"22":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"5":{"tf":1.0}}}}}}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":2,"docs":{"16":{"tf":1.0},"20":{"tf":1.4142135623730951}}}}}}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":3,"docs":{"0":{"tf":1.0},"19":{"tf":1.0},"9":{"tf":1.0}}},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":3,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"13":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{")":{"?":{")":{".":{"a":{"b":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":2,"docs":{"15":{"tf":2.0},"23":{"tf":1.4142135623730951}}}}}}},"df":6,"docs":{"10":{"tf":1.0},"12":{"tf":1.0},"15":{"tf":1.7320508075688772},"4":{"tf":1.7320508075688772},"6":{"tf":1.4142135623730951},"9":{"tf":1.0}},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.4142135623730951}}}}}},"s":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"15":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}}}},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"n":{"df":1,"docs":{"23":{"tf":1.0}}},"r":{"df":0,"docs":{},"m":{"df":4,"docs":{"10":{"tf":2.0},"11":{"tf":1.0},"13":{"tf":1.4142135623730951},"9":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"df":5,"docs":{"1":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"23":{"tf":2.0}}}}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}}}}}}}},"i":{"df":0,"docs":{},"n":{"df":6,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.7320508075688772},"13":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.4142135623730951},"23":{"tf":1.0}},"g":{"df":1,"docs":{"17":{"tf":1.0}}}},"r":{"d":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}},"m":{"2":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"16":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":2,"docs":{"0":{"tf":1.0},"17":{"tf":1.0}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":5,"docs":{"1":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.0}}}}}}}},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":7,"docs":{"15":{"tf":1.7320508075688772},"16":{"tf":1.0},"2":{"tf":1.4142135623730951},"21":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"6":{"tf":1.4142135623730951}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"l":{"df":2,"docs":{"0":{"tf":1.0},"18":{"tf":1.0}}}},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"0":{"tf":1.0}}}},"p":{"df":1,"docs":{"23":{"tf":1.0}}},"r":{"df":0,"docs":{},"u":{"df":1,"docs":{"3":{"tf":1.0}}}},"t":{"a":{"df":0,"docs":{},"l":{"df":2,"docs":{"0":{"tf":1.0},"15":{"tf":1.0}}}},"df":0,"docs":{}}},"r":{"a":{"c":{"df":0,"docs":{},"e":{"_":{"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"e":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"2":{"0":{"2":{"1":{".":{"c":{"df":0,"docs":{},"s":{"df":0,"docs":{},"v":{"df":1,"docs":{"22":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":2,"docs":{"20":{"tf":1.0},"22":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":1,"docs":{"8":{"tf":1.4142135623730951}}}}}}}},"df":5,"docs":{"10":{"tf":1.0},"11":{"tf":1.4142135623730951},"12":{"tf":1.4142135623730951},"21":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"e":{"d":{".":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"r":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":4,"docs":{"10":{"tf":1.0},"20":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}}},"y":{"df":0,"docs":{},"’":{"df":1,"docs":{"10":{"tf":1.0}}}}}}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":3,"docs":{"13":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"p":{"df":1,"docs":{"23":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"c":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"13":{"tf":1.4142135623730951}}}},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"6":{"tf":1.0}}}}},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"21":{"tf":1.0}}}},"o":{"df":6,"docs":{"10":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":3,"docs":{"5":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}}}}}},"r":{"df":4,"docs":{"13":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":6,"docs":{"15":{"tf":2.23606797749979},"16":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"3":{"tf":1.4142135623730951}}}}}}}},"q":{"df":0,"docs":{},"u":{"df":5,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"17":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"l":{"df":1,"docs":{"21":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}}}}},"k":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"n":{"df":1,"docs":{"20":{"tf":1.0}}}}}}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"19":{"tf":1.0}}}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"8":{"tf":1.0}}}}}},"p":{"d":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"12":{"tf":1.0},"13":{"tf":1.0}}}},"df":0,"docs":{}},"df":3,"docs":{"10":{"tf":1.0},"16":{"tf":1.4142135623730951},"3":{"tf":1.0}},"’":{"df":1,"docs":{"16":{"tf":1.0}}}},"s":{"df":12,"docs":{"1":{"tf":2.0},"10":{"tf":2.0},"12":{"tf":2.0},"13":{"tf":1.0},"15":{"tf":2.23606797749979},"16":{"tf":1.7320508075688772},"20":{"tf":1.7320508075688772},"3":{"tf":1.7320508075688772},"4":{"tf":1.4142135623730951},"6":{"tf":1.7320508075688772},"7":{"tf":2.0},"8":{"tf":1.7320508075688772}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":6,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.7320508075688772},"4":{"tf":1.0},"7":{"tf":1.4142135623730951}},"e":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"o":{"c":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"p":{"df":1,"docs":{"4":{"tf":1.4142135623730951}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":2,"docs":{"10":{"tf":1.0},"11":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"i":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"21":{"tf":1.0},"3":{"tf":1.0}}}},"t":{"df":3,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"c":{"!":{"[":{"2":{"0":{"2":{"1":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"r":{"b":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"df":0,"docs":{}},"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"19":{"tf":1.0},"22":{"tf":1.0}}}}}}},"df":3,"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":1,"docs":{"13":{"tf":1.0}},"i":{"df":4,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.7320508075688772}}}}},"s":{"df":0,"docs":{},"u":{"df":2,"docs":{"0":{"tf":1.0},"21":{"tf":1.0}}}}}},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"w":{"df":1,"docs":{"1":{"tf":1.0}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"(":{"&":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":2,"docs":{"12":{"tf":1.0},"6":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":4,"docs":{"12":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":2.0},"6":{"tf":1.0}}}}}},"s":{"df":2,"docs":{"13":{"tf":1.0},"21":{"tf":1.4142135623730951}}}},"w":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"k":{"df":1,"docs":{"1":{"tf":1.0}}}},"y":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"_":{"d":{"df":0,"docs":{},"e":{"c":{"a":{"df":0,"docs":{},"y":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":6,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.4142135623730951},"21":{"tf":1.0},"4":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}}}}}}},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"df":1,"docs":{"3":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"16":{"tf":1.0},"19":{"tf":1.4142135623730951}}}}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"8":{"tf":1.0}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"21":{"tf":1.4142135623730951},"3":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"df":1,"docs":{"10":{"tf":1.0}},"s":{"df":0,"docs":{},"p":{"a":{"c":{"df":3,"docs":{"1":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"s":{"df":2,"docs":{"16":{"tf":1.0},"21":{"tf":1.0}}},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"13":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":4,"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.0}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"19":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"3":{"tf":1.0}}}}}}},"x":{"df":1,"docs":{"14":{"tf":1.4142135623730951}}},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":3,"docs":{"10":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.7320508075688772}}}}},"o":{"df":0,"docs":{},"o":{"df":1,"docs":{"1":{"tf":1.0}}}}}}},"breadcrumbs":{"root":{"0":{"df":1,"docs":{"11":{"tf":1.0}}},"a":{"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"12":{"tf":1.0}}}}}}}},"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":4,"docs":{"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"16":{"tf":1.0}}}}}}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":3,"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.4142135623730951},"17":{"tf":1.0}}}}}}},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":5,"docs":{"11":{"tf":1.0},"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":6,"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}}}}},"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"–":{"a":{"df":0,"docs":{},"s":{"c":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"u":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"n":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0}}}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":3,"docs":{"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0}}}}},"df":0,"docs":{}},"x":{"a":{"c":{"df":0,"docs":{},"t":{"df":4,"docs":{"2":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":6,"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":1.0}}}}}}}},"f":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"3":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"8":{"tf":1.0}}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"r":{"c":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"3":{"tf":1.0}}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"l":{"a":{"df":0,"docs":{},"y":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":6,"docs":{"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"m":{"a":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"h":{"df":3,"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0}}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"17":{"tf":1.0}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"df":1,"docs":{"13":{"tf":1.0}}}}},"o":{"b":{"df":0,"docs":{},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":6,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"9":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}},"c":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"p":{"df":4,"docs":{"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"17":{"tf":1.0},"4":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"n":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"13":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"8":{"tf":1.0}}}}}}}}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":6,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"9":{"tf":1.4142135623730951}}}}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}}}},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"u":{"c":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"s":{"a":{"d":{"d":{"df":0,"docs":{},"l":{"df":6,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"9":{"tf":1.4142135623730951}}}},"df":0,"docs":{}},"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"14":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":1,"docs":{"21":{"tf":1.0}}}}},"u":{"b":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"1":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":1,"docs":{"19":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"1":{"tf":1.0}}}}},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"8":{"tf":1.0}}}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":1,"docs":{"16":{"tf":1.0}}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":1,"docs":{"4":{"tf":1.0}}}},"r":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}},"t":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"title":{"root":{"0":{"df":1,"docs":{"11":{"tf":1.0}}},"a":{"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"12":{"tf":1.0}}}}}}}},"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"5":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"16":{"tf":1.0}}}}}}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":2,"docs":{"15":{"tf":1.0},"16":{"tf":1.0}}}}}}},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":3,"docs":{"11":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}}}}},"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"–":{"a":{"df":0,"docs":{},"s":{"c":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"u":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"n":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"2":{"tf":1.0}}}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":1,"docs":{"2":{"tf":1.0}}}}},"df":0,"docs":{}},"x":{"a":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"2":{"tf":1.0},"7":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"4":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"18":{"tf":1.0},"21":{"tf":1.0}}}}}}}},"f":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"3":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"8":{"tf":1.0}}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"r":{"c":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"3":{"tf":1.0}}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"l":{"a":{"df":0,"docs":{},"y":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"18":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"10":{"tf":1.0}}}}}},"m":{"a":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"17":{"tf":1.0}}}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"df":1,"docs":{"13":{"tf":1.0}}}}},"o":{"b":{"df":0,"docs":{},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}}}},"c":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"p":{"df":2,"docs":{"15":{"tf":1.0},"4":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"n":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"13":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"t":{"df":0,"docs":{},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"22":{"tf":1.0}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"8":{"tf":1.0}}}}}}}}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}}}},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"u":{"c":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"s":{"a":{"d":{"d":{"df":0,"docs":{},"l":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"14":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":1,"docs":{"21":{"tf":1.0}}}}},"u":{"b":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"1":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":1,"docs":{"19":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"1":{"tf":1.0}}}}},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"8":{"tf":1.0}}}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":1,"docs":{"16":{"tf":1.0}}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":1,"docs":{"4":{"tf":1.0}}}},"r":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}},"t":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"lang":"English","pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5"},"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}}}'));