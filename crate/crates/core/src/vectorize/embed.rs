use super::VectorizeError;
use crate::cloud::PointCloud;

/// Delay embedding: points `(x_i, x_{i+tau}, ..., x_{i+(m-1)tau})` for
/// `i = 0, stride, 2 stride, ...`.
pub fn delay_embed(
    series: &[f64],
    embed_dim: usize,
    tau: usize,
    stride: usize,
) -> Result<PointCloud, VectorizeError> {
    if !(2..=3).contains(&embed_dim) {
        return Err(VectorizeError::InvalidEmbedding(format!(
            "embedding dimension must be 2 or 3, got {embed_dim}"
        )));
    }
    if tau == 0 || stride == 0 {
        return Err(VectorizeError::InvalidEmbedding(
            "delay and stride must be positive".into(),
        ));
    }
    let span = (embed_dim - 1) * tau;
    if series.len() < span + 1 {
        return Err(VectorizeError::SeriesTooShort {
            len: series.len(),
            dim: embed_dim,
            tau,
        });
    }
    if let Some(i) = series.iter().position(|v| !v.is_finite()) {
        return Err(VectorizeError::InvalidEmbedding(format!(
            "series value {i} is not finite"
        )));
    }
    let mut coords = Vec::new();
    for start in (0..series.len() - span).step_by(stride) {
        coords.extend((0..embed_dim).map(|k| series[start + k * tau]));
    }
    Ok(PointCloud::from_flat(embed_dim, coords).expect("finite coordinates"))
}
