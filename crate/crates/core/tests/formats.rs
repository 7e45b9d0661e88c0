//! Output formats other tools parse; changing any of these is a breaking change.

use acl::adapt::CycleSummary;
use acl::experts::PromotionDecision;
use acl::harness::drift::{DECISION_LOG_HEADER, DRIFT_CSV_HEADER};
use acl::harness::monitor_suite::SUITE_CSV_HEADER;
use acl::harness::worldmodel_trials::CSV_HEADER as CURVE_HEADER;
use acl::monitors::{EventKind, MonitorEvent, Source};
use acl::trust::TrustVector;

#[test]
fn csv_headers() {
    assert_eq!(DRIFT_CSV_HEADER, "block_start,block_end,config,accuracy,confidence,alert");
    assert_eq!(DECISION_LOG_HEADER, "t,image,label,chosen,confidence,scores");
    assert_eq!(CURVE_HEADER, "bin_start,bin_end,mean_loss,std_loss,n");
    assert_eq!(
        SUITE_CSV_HEADER,
        "scenario,windows,violations,notifies,retrain_signals,shutdowns,holdout_accuracy,final_action"
    );
    assert_eq!(
        CycleSummary::CSV_HEADER,
        "t,expert,replaced_count,clusters_found,new_class_proposals,promotion_decision,reason"
    );
    assert_eq!(
        TrustVector::csv_header(3),
        "ae_loss,emd_nn,knn_agree,margin,varratio,entropy,p0,p1,p2"
    );
}

#[test]
fn cycle_rows() {
    let mut c = CycleSummary {
        t: 4,
        expert: 1,
        replaced_count: 16,
        clusters_found: 2,
        new_class_proposals: 0,
        decision: None,
    };
    assert_eq!(c.csv_row(), "4,1,16,2,0,skip,");
    c.decision = Some(PromotionDecision::Reject(3));
    assert_eq!(c.csv_row(), "4,1,16,2,0,reject,condition 3");
    c.decision = Some(PromotionDecision::Promote);
    assert_eq!(c.csv_row(), "4,1,16,2,0,promote,");
}

#[test]
fn event_line() {
    let e = MonitorEvent {
        timestep: 9,
        source: Source::SystemMonitor,
        kind: EventKind::Notify,
        payload: vec![("reason".into(), "low_confidence".into())],
    };
    assert_eq!(e.to_string(), "t=9 source=system kind=notify reason=low_confidence");
}
